"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints a PASS/FAIL line to the real stdout so the verdicts are
visible regardless of pytest's capture settings.
"""

import math
import random
import sys
import time

from eisenkit.eisenstein import (
    TruncationPolicy,
    eval_fourier,
    eval_lattice_sum,
    extract_coefficient_by_quadrature,
    first_coefficient_xi_check,
    fourier_coefficient,
    functional_equation_defect,
    functional_equation_grid,
    scattering_ratio,
)
from eisenkit.euler_products import partial_l, trivial_zeta_data
from eisenkit.root_systems import (
    ParabolicDatum,
    build_root_system,
    levi_positive_roots,
    nilradical_decomposition,
    positive_root_count_closed_form,
    weyl_group_order,
    weyl_order_closed_form,
)
from eisenkit.special_functions import bessel_k, xi_completed, xi_reflection_sample

ROOT_SUITE = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("D", 4), ("F", 4), ("G", 2),
]


def _report(number, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number}: {verdict} — {detail}", file=sys.__stdout__, flush=True)
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_cross_validation():
    start = time.time()
    policy = TruncationPolicy(lattice_radius=2000, fourier_terms=30)
    worst = 0.0
    for z in (1j, 0.3 + 1.2j, -0.4 + 0.8j):
        for s in (2.2, 2.5, complex(3, 1)):
            diff = abs(eval_lattice_sum(z, s, policy).value - eval_fourier(z, s, policy).value)
            worst = max(worst, diff)
    elapsed = time.time() - start
    ok = worst < 1e-6 and elapsed < 30.0
    _report(1, ok, f"lattice-vs-Fourier worst |diff| = {worst:.3e} (< 1e-6), {elapsed:.1f}s (< 30s)")


def test_criterion_2_functional_equation_grid():
    start = time.time()
    policy = TruncationPolicy(fourier_terms=40)
    worst = max(
        functional_equation_defect(0.3 + 1.4j, s, policy) for s in functional_equation_grid()
    )
    elapsed = time.time() - start
    ok = worst < 1e-8 and elapsed < 60.0
    _report(2, ok, f"max FE defect on 20-point grid = {worst:.3e} (< 1e-8), {elapsed:.1f}s (< 60s)")


def test_criterion_3_xi_reflection():
    start = time.time()
    worst = max(abs(xi_completed(s) - xi_completed(1.0 - s)) for s in xi_reflection_sample(100))
    elapsed = time.time() - start
    ok = worst < 1e-10 and elapsed < 5.0
    _report(3, ok, f"max |xi(s) - xi(1-s)| over 100 samples = {worst:.3e} (< 1e-10), {elapsed:.2f}s (< 5s)")


def test_criterion_4_first_coefficient():
    worst = max(first_coefficient_xi_check(s) for s in functional_equation_grid())
    policy = TruncationPolicy(lattice_radius=800, fourier_terms=30, quadrature_nodes=64)
    extracted = extract_coefficient_by_quadrature(1, 1.0, 2.5, policy, source="lattice")
    closed = fourier_coefficient(1, 1.0, 2.5)
    diff = abs(extracted - closed)
    ok = worst < 1e-10 and diff < 1e-6
    _report(
        4,
        ok,
        f"first-coefficient defect max = {worst:.3e} (< 1e-10); "
        f"quadrature a_1 vs closed form = {diff:.3e} (< 1e-6)",
    )


def test_criterion_5_constant_term_quadrature():
    policy = TruncationPolicy(lattice_radius=600, fourier_terms=30, quadrature_nodes=128)
    extracted = extract_coefficient_by_quadrature(0, 2.0, 2.5, policy, source="lattice")
    closed = fourier_coefficient(0, 2.0, 2.5)
    diff = abs(extracted - closed)
    ok = diff < 1e-6
    _report(5, ok, f"128-node constant-term quadrature vs a_0 = {diff:.3e} (< 1e-6)")


def test_criterion_6_trivial_data_identity():
    data = trivial_zeta_data(10**5)
    value = partial_l(data, 2.0, 10**5).value
    zeta2 = 1.6449340668482264  # pi^2 / 6
    direct = 1.0 + 0.0j
    for place in data.places:
        direct *= 1.0 / (1.0 - complex(place.q) ** (-complex(2.0)))
    ok = abs(value - zeta2) < 1e-4 and value == direct
    _report(
        6,
        ok,
        f"|partial L - zeta(2)| = {abs(value - zeta2):.3e} (< 1e-4); "
        f"bit-for-bit with direct prime product: {value == direct}",
    )


def test_criterion_7_root_system_suite():
    start = time.time()
    problems = []
    for cartan_type, rank in ROOT_SUITE:
        rs = build_root_system(cartan_type, rank)
        if len(rs.positive_roots) != positive_root_count_closed_form(cartan_type, rank):
            problems.append(f"{rs.name}: positive-root count")
        if weyl_group_order(rs) != weyl_order_closed_form(rs):
            problems.append(f"{rs.name}: Weyl order")
        for k in range(rank):
            p = ParabolicDatum(rs, k)
            dec = nilradical_decomposition(p)
            expected = len(rs.positive_roots) - len(levi_positive_roots(p))
            if sum(dec.dimensions) != expected:
                problems.append(f"{rs.name} remove {k}: dimension conservation")
    g2 = nilradical_decomposition(ParabolicDatum(build_root_system("G", 2), 1))
    if not (g2.m == 2 and g2.dimensions == (4, 1)):
        problems.append(f"G2 long-root parabolic: m={g2.m}, dims={g2.dimensions}")
    elapsed = time.time() - start
    ok = not problems and elapsed < 10.0
    detail = "counts, Weyl orders, conservation, G2 dims [4, 1] all verified"
    if problems:
        detail = "; ".join(problems)
    _report(7, ok, f"{detail}, {elapsed:.1f}s (< 10s)")


def test_criterion_8_scattering_unitarity():
    worst = max(
        abs(scattering_ratio(s) * scattering_ratio(1.0 - s) - 1.0)
        for s in functional_equation_grid()
    )
    ok = worst < 1e-10
    _report(8, ok, f"max |c(s) c(1-s) - 1| on grid = {worst:.3e} (< 1e-10)")


def test_criterion_9_bessel_oracle():
    worst_closed = 0.0
    for y in (0.5, 1.0, 2.0, 5.0):
        closed = math.sqrt(math.pi / (2.0 * y)) * math.exp(-y)
        worst_closed = max(worst_closed, abs(bessel_k(0.5, y) - closed))
    rng = random.Random(99)
    worst_even = 0.0
    for _ in range(200):
        order = complex(rng.uniform(-3, 3), rng.uniform(-10, 10))
        y = rng.uniform(0.3, 20.0)
        worst_even = max(worst_even, abs(bessel_k(order, y) - bessel_k(-order, y)))
    ok = worst_closed < 1e-12 and worst_even < 1e-12
    _report(
        9,
        ok,
        f"K_(1/2) closed form max |diff| = {worst_closed:.3e} (< 1e-12); "
        f"evenness max |diff| = {worst_even:.3e} (< 1e-12)",
    )
