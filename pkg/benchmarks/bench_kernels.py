#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--radius 2000] [--repeats 3]

Times the coprime lattice sum (single point and a 32-point x-batch) and the
K-Bessel trapezoid rule on whichever backends are importable, and reports the
speedup plus the largest value discrepancy between them.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from eisenkit._kernels import _pure

try:
    from eisenkit._kernels import _speedups
except ImportError:
    _speedups = None


def _time(fn, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--radius", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernels not built (python setup.py build_ext --inplace); "
              "timing the pure backend only")

    cases = [
        ("lattice_sum   real s", "lattice_sum", (0.3, 1.2, 2.5, 0.0, args.radius)),
        ("lattice_sum complex s", "lattice_sum", (0.3, 1.2, 3.0, 1.0, args.radius)),
        ("bessel trapezoid x1e4", None, None),
    ]

    print(f"{'kernel':<24}{'pure':>12}{'compiled':>12}{'speedup':>10}{'max |diff|':>14}")
    for label, name, call_args in cases:
        if name is None:
            # many small bessel calls, the shape the Fourier evaluator produces
            def run(mod):
                def inner():
                    acc = 0j
                    for k in range(10_000):
                        acc += mod.bessel_k_trapezoid(1.5, 2.0, 1.0 + (k % 7), 0.1, 60)
                    return acc
                return inner

            t_pure, v_pure = _time(run(_pure), args.repeats)
            if _speedups is None:
                print(f"{label:<24}{t_pure:>11.3f}s{'-':>12}{'-':>10}{'-':>14}")
                continue
            t_fast, v_fast = _time(run(_speedups), args.repeats)
            diff = abs(v_pure - v_fast)
        else:
            fn_pure = getattr(_pure, name)
            t_pure, v_pure = _time(lambda: fn_pure(*call_args), args.repeats)
            if _speedups is None:
                print(f"{label:<24}{t_pure:>11.3f}s{'-':>12}{'-':>10}{'-':>14}")
                continue
            fn_fast = getattr(_speedups, name)
            t_fast, v_fast = _time(lambda: fn_fast(*call_args), args.repeats)
            diff = float(np.max(np.abs(np.asarray(v_pure) - np.asarray(v_fast))))
        print(f"{label:<24}{t_pure:>11.3f}s{t_fast:>11.3f}s{t_pure / t_fast:>9.1f}x{diff:>14.2e}")

    # the x-batched lattice helper is numpy on every backend: its vectorized
    # transcendentals beat scalar compiled loops for this access pattern
    xs = np.linspace(-0.5, 0.4375, 32)
    t_batch, _ = _time(
        lambda: _pure.lattice_sum_batch(xs, 1.0, 2.5, 0.0, max(args.radius // 4, 10)),
        args.repeats,
    )
    print(f"{'lattice batch (32 xs)':<24}{t_batch:>11.3f}s{'(numpy path on both backends)':>36}")


if __name__ == "__main__":
    main()
