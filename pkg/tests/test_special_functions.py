"""Special-function contracts against independent oracles.

Expected values marked "frozen" were computed by the oracle implementations
in oracles.py (quadrature, direct series with tail, high-order independent
Euler-Maclaurin, truncated Euler product, doubled-resolution K-Bessel
trapezoid) and pinned here.
"""

import cmath
import math
import random

import pytest

import oracles
from eisenkit.errors import DomainError, PoleError
from eisenkit.special_functions import (
    AccuracyPolicy,
    bessel_k,
    gamma,
    sigma_power,
    xi_completed,
    xi_reflection_sample,
    zeta,
)

# ---------------------------------------------------------------------------
# gamma


def test_gamma_trivial_integers():
    assert gamma(1) == pytest.approx(1.0, rel=1e-12)
    assert gamma(5) == pytest.approx(24.0, rel=1e-12)


def test_gamma_half_matches_quadrature_oracle():
    # frozen: oracles.gamma_quadrature(0.5) = 1.7724538509051133
    assert abs(gamma(0.5) - 1.7724538509051133) < 1e-12


def test_gamma_recursion_random_sample():
    rng = random.Random(5)
    for _ in range(60):
        s = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if s.real <= 0.5 and min(abs(s - round(s.real)), abs(s + 1 - round(s.real + 1))) < 1e-3:
            continue
        lhs = gamma(s + 1)
        assert abs(lhs - s * gamma(s)) < 1e-10 * abs(lhs)


def test_gamma_reflection_region_against_quadrature():
    # Gamma(-1.5) = Gamma(2.5) / ((-1.5)(-0.5)(0.5)(1.5)); oracle on the
    # positive side, recursion supplies the negative value
    target = oracles.gamma_quadrature(2.5) / ((-1.5) * (-0.5) * 0.5 * 1.5)
    assert abs(gamma(-1.5) - target) < 1e-12 * abs(target)


def test_gamma_pole_and_overflow():
    for bad in (0.0, -1.0, -7.0, -3.0 + 1e-12j):
        with pytest.raises(PoleError):
            gamma(bad)
    with pytest.raises(OverflowError):
        gamma(171.0)
    gamma(169.9)  # still in range


# ---------------------------------------------------------------------------
# zeta


def test_zeta_basel_matches_series_oracle():
    # frozen: oracles.zeta_series_with_integral_tail(2.0) = 1.6449340668482333
    assert abs(zeta(2) - 1.6449340668482333) < 1e-12


def test_zeta_zero_matches_high_order_euler_maclaurin_oracle():
    # frozen: oracles.zeta_euler_maclaurin_highorder(0.0) = -0.5 (exactly)
    assert abs(zeta(0) - (-0.5)) < 1e-12


def test_zeta_three_matches_euler_product_oracle():
    # frozen: oracles.zeta_euler_product(3.0, 10**5) = 1.2020569031551838
    assert abs(zeta(3) - 1.2020569031551838) < 1e-10


@pytest.mark.parametrize("s", [2.0, 3.0, 4.0])
def test_zeta_euler_product_consistency(s):
    product = oracles.zeta_euler_product(s, 10**5)
    # documented product tail |log zeta/product| <= Q^(1-s)/((s-1) ln Q) * 2,
    # plus the serial roundoff of multiplying pi(10^5) = 9592 factors
    bound = 2.0 * (10**5) ** (1.0 - s) / ((s - 1.0) * math.log(10**5))
    roundoff = 9592 * 2.3e-16
    assert abs(zeta(s) - product) <= abs(product) * (math.expm1(bound) + roundoff)


def test_zeta_matches_independent_euler_maclaurin_on_panel():
    # the fixed-order oracle is well conditioned only for Re(s) >= ~ -1/2;
    # the reflection region is cross-checked against mpmath below
    pts = [0.5, -0.5, 11.0, complex(0.5, 14.134725), complex(0.2, 30.0), complex(-0.3, 20.0)]
    for s in pts:
        want = oracles.zeta_euler_maclaurin_highorder(s)
        assert abs(zeta(s) - want) < 1e-12 * max(1.0, abs(want))


def test_zeta_reflection_region_vs_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    for s in (complex(-5.0, 20.0), complex(-9.5, 0.0), complex(-18.2, 44.0), complex(-0.7, -3.0)):
        want = complex(mp.zeta(mp.mpc(s)))
        assert abs(zeta(s) - want) < 1e-12 * max(1.0, abs(want))


def test_zeta_trivial_zeros_and_pole():
    assert zeta(-10) == 0.0
    assert abs(zeta(-2)) < 1e-15
    with pytest.raises(PoleError):
        zeta(1.0)
    with pytest.raises(PoleError):
        zeta(1.0 + 1e-12j)


# ---------------------------------------------------------------------------
# completed zeta


def test_xi_at_two_is_pi_over_six():
    assert abs(xi_completed(2) - math.pi / 6.0) < 1e-12


def test_xi_at_half_matches_composed_oracle():
    # frozen: pi^(-1/4) * oracles.gamma_quadrature(0.25)
    #         * oracles.zeta_euler_maclaurin_highorder(0.5) = -3.976966225505629
    assert abs(xi_completed(0.5) - (-3.976966225505629)) < 1e-9


def test_xi_reflection_pair_example():
    assert abs(xi_completed(0.3 + 2j) - xi_completed(0.7 - 2j)) < 1e-10


def test_xi_reflection_sweep():
    worst = max(abs(xi_completed(s) - xi_completed(1.0 - s)) for s in xi_reflection_sample())
    assert worst < 1e-10


def test_xi_poles():
    for bad in (0.0, 1.0, 1e-12, 1.0 + 1e-11j):
        with pytest.raises(PoleError):
            xi_completed(bad)


# ---------------------------------------------------------------------------
# power-divisor sums


def test_sigma_trivial_one():
    for s in (0, 1, 2.5, complex(0.3, -2.0)):
        assert sigma_power(1, s) == 1.0


def test_sigma_enumeration_examples():
    # frozen by brute divisor enumeration: {1,2,3,4,6,12} and {1,2,3,6}
    assert sigma_power(12, 0) == 6.0
    assert sigma_power(6, 1) == 12.0


def test_sigma_matches_brute_enumeration_random():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(1, 5000)
        s = complex(rng.uniform(-2, 2), rng.uniform(-3, 3))
        want = oracles.divisor_sum_brute(n, s)
        assert abs(sigma_power(n, s) - want) < 1e-12 * max(1.0, abs(want))


def test_sigma_multiplicative_on_coprime_pairs():
    rng = random.Random(23)
    done = 0
    while done < 60:
        a = rng.randrange(2, 10**4)
        b = rng.randrange(2, 10**4)
        if math.gcd(a, b) != 1:
            continue
        s = complex(rng.uniform(-1.5, 1.5), rng.uniform(-4, 4))
        lhs = sigma_power(a * b, s)
        rhs = sigma_power(a, s) * sigma_power(b, s)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))
        done += 1


def test_sigma_large_n_and_domain():
    assert sigma_power(10**12, 0) == 169.0  # tau(2^12 5^12) = 13 * 13
    with pytest.raises(DomainError):
        sigma_power(0, 2)
    with pytest.raises(DomainError):
        sigma_power(10**12 + 1, 2)


# ---------------------------------------------------------------------------
# K-Bessel


def test_bessel_half_order_closed_form():
    # K_{1/2}(y) = sqrt(pi / (2 y)) e^{-y}
    for y in (0.5, 1.0, 2.0, 5.0):
        closed = math.sqrt(math.pi / (2.0 * y)) * math.exp(-y)
        assert abs(bessel_k(0.5, y) - closed) < 1e-12
    # cross-checked against the quadrature oracle at doubled resolution
    assert abs(bessel_k(0.5, 2.0) - oracles.bessel_k_quadrature(0.5, 2.0)) < 1e-13


def test_bessel_zero_order_matches_doubled_node_oracle():
    # frozen: oracles.bessel_k_quadrature(0.0, 1.0) = 0.4210244382407084
    assert abs(bessel_k(0, 1.0) - 0.4210244382407084) < 1e-10


def test_bessel_even_in_order():
    rng = random.Random(37)
    for _ in range(200):
        order = complex(rng.uniform(-3, 3), rng.uniform(-10, 10))
        y = rng.uniform(0.3, 20.0)
        assert abs(bessel_k(order, y) - bessel_k(-order, y)) < 1e-12


def test_bessel_conjugate_symmetry():
    order = complex(0.7, 2.3)
    assert bessel_k(order.conjugate(), 1.5) == bessel_k(order, 1.5).conjugate()


def test_bessel_complex_order_against_oracle_panel():
    for order in (complex(0.5, 1.0), complex(2.0, -5.0), complex(0.0, 9.0)):
        for y in (0.3, 2.0, 12.0):
            want = oracles.bessel_k_quadrature(order, y)
            assert abs(bessel_k(order, y) - want) < 1e-12 * max(1.0, abs(want))


def test_bessel_domain_and_overflow():
    with pytest.raises(DomainError):
        bessel_k(0.5, 0.0)
    with pytest.raises(DomainError):
        bessel_k(0.5, -1.0)
    with pytest.raises(DomainError):
        bessel_k(101.0, 1.0)
    with pytest.raises(OverflowError):
        bessel_k(100.0, 0.05)


# ---------------------------------------------------------------------------
# policy plumbing


def test_accuracy_policy_validation():
    with pytest.raises(DomainError):
        AccuracyPolicy(target_abs_error=0.0)
    with pytest.raises(DomainError):
        AccuracyPolicy(target_rel_error=1.5)
    with pytest.raises(DomainError):
        AccuracyPolicy(max_terms=4)


def test_results_are_finite_complex():
    for value in (gamma(3.3 + 4j), zeta(0.2 + 3j), xi_completed(4.2 - 1j), bessel_k(1.1j, 2.2)):
        assert isinstance(value, complex)
        assert math.isfinite(value.real) and math.isfinite(value.imag)
        assert cmath.isfinite(value)
