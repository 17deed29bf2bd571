"""Hot-loop kernels with a compiled core and a pure-numpy fallback.

The compiled Cython module provides the two scalar hot kernels (single-point
coprime lattice sum, K-Bessel trapezoid) and is preferred when built; the
x-batched lattice helper always uses the numpy implementation, which is
SIMD-vectorized end to end and measures faster than scalar loops (see
benchmarks/bench_kernels.py).  Setting ``EISENKIT_PURE_PYTHON=1`` forces the
pure fallback everywhere.  Both implementations follow identical conventions,
documented in ``_pure``.
"""

import os

from ._pure import lattice_sum_batch

_FORCE_PURE = os.environ.get("EISENKIT_PURE_PYTHON", "0") not in ("", "0")

if not _FORCE_PURE:
    try:
        from ._speedups import bessel_k_trapezoid, lattice_sum

        BACKEND = "compiled"
    except ImportError:
        from ._pure import bessel_k_trapezoid, lattice_sum

        BACKEND = "pure"
else:
    from ._pure import bessel_k_trapezoid, lattice_sum

    BACKEND = "pure"


def backend() -> str:
    """Name of the kernel implementation in use: 'compiled' or 'pure'."""
    return BACKEND


__all__ = ["backend", "BACKEND", "lattice_sum", "lattice_sum_batch", "bessel_k_trapezoid"]
