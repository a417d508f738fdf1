"""Exact polynomial layer: recurrences against independent oracles."""

import random
from fractions import Fraction as F

import pytest

from qescal.polys import (
    RatFun,
    RatPoly,
    count_positive_roots,
    count_real_roots,
    exceptional_laguerre,
    laguerre,
    laguerre_derivative,
    poly_eval,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    rising,
)


def laguerre_sum_formula(n, alpha):
    """Independent oracle: L_n^a(x) = sum_i (-1)^i binom(n+a, n-i) x^i / i!."""
    alpha = F(alpha)
    coeffs = []
    fact = 1
    for i in range(n + 1):
        if i:
            fact *= i
        binom = rising(alpha + i + 1, n - i)
        for j in range(1, n - i + 1):
            binom /= j
        coeffs.append((-1) ** i * binom / fact)
    return RatPoly(coeffs)


ALPHAS = [F(0), F(1, 2), F(1), F(3, 2), F(5, 2)]


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", range(13))
def test_recurrence_matches_sum_formula(n, alpha):
    assert laguerre(n, alpha) == laguerre_sum_formula(n, alpha)


def test_laguerre_edge_conventions():
    assert laguerre(0, F(3, 2)) == RatPoly.one()
    assert laguerre(-1, F(7, 3)).is_zero
    with pytest.raises(ValueError):
        laguerre(-2, F(1))


def test_laguerre_one_at_negated_argument():
    # L_1^(a0+1/2)(-x) = x + a0 + 3/2, the ground-state denominator shape
    for a0 in (F(1, 2), F(1), F(2)):
        assert laguerre(1, a0 + F(1, 2)).scale_arg(-1) == RatPoly((a0 + F(3, 2), 1))


@pytest.mark.parametrize("alpha", [F(1, 2), F(1), F(7, 3)])
@pytest.mark.parametrize("n", range(11))
def test_derivative_equals_index_shift(n, alpha):
    for order in range(n + 3):
        direct = laguerre_derivative(n, alpha, order)
        if order > n:
            assert direct.is_zero
        else:
            assert direct == (-1) ** order * laguerre(n - order, alpha + order)


def test_derivative_examples():
    assert laguerre_derivative(1, F(2, 3), 1) == RatPoly((-1,))
    assert laguerre_derivative(1, F(2, 3), 1) == -laguerre(0, F(2, 3) + 1)
    assert laguerre_derivative(1, F(2, 3), 2).is_zero
    assert laguerre_derivative(3, F(1, 2), 1) == -laguerre(2, F(3, 2))


def test_exceptional_small_cases():
    for k in (F(5, 2), F(3), F(7, 2)):
        assert exceptional_laguerre(1, 1, k) == RatPoly((k + 1, 1))
    # ground-state numerator: k = alpha + 3/2 gives x + alpha + 5/2
    for alpha in (F(1, 2), F(1), F(2)):
        assert exceptional_laguerre(1, 1, alpha + F(3, 2)) == RatPoly((alpha + F(5, 2), 1))


def test_exceptional_quadratic_frozen():
    # brute-force expansion: L_1^{5/2}(-x) L_1^{3/2}(x) + L_1^{3/2}(-x) L_0^{5/2}(x)
    #   = (x + 7/2)(5/2 - x) + (x + 5/2) = 45/4 - x^2
    assert exceptional_laguerre(2, 1, F(5, 2)) == RatPoly((F(45, 4), 0, -1))


def test_exceptional_rejects_n_below_m():
    with pytest.raises(ValueError):
        exceptional_laguerre(1, 2, F(5, 2))
    with pytest.raises(ValueError):
        exceptional_laguerre(0, 1, F(5, 2))


@pytest.mark.parametrize("n", range(7))
def test_exceptional_m0_is_classical(n):
    # with m = 0 the composition collapses to the usual Laguerre polynomial
    for k in (F(1, 2), F(2)):
        assert exceptional_laguerre(n, 0, k) == laguerre(n, k)


def test_exceptional_degree():
    for m in (0, 1, 2, 3):
        for n in range(m, m + 5):
            for k in (F(1, 2), F(5, 2)):
                assert exceptional_laguerre(n, m, k).degree == n


def test_poly_eval_examples():
    assert poly_eval(RatPoly((1, 1)), F(0)) == 1
    assert poly_eval(laguerre(1, F(3, 2)), F(0)) == F(5, 2)
    # two independent routes to Lhat^{5/2}_{2,1}(1)
    direct = laguerre(1, F(5, 2)).scale_arg(-1)(F(1)) * laguerre(1, F(3, 2))(F(1)) + laguerre(
        1, F(3, 2)
    ).scale_arg(-1)(F(1)) * laguerre(0, F(5, 2))(F(1))
    assert poly_eval(exceptional_laguerre(2, 1, F(5, 2)), F(1)) == direct == F(41, 4)
    # float path agrees with the exact value
    assert poly_eval(exceptional_laguerre(2, 1, F(5, 2)), 1.0) == pytest.approx(41 / 4, rel=1e-15)


def test_arithmetic_is_a_ring_homomorphism_under_eval():
    rng = random.Random(7)

    def random_poly():
        return RatPoly([F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(0, 6))])

    for _ in range(40):
        p, q = random_poly(), random_poly()
        x = F(rng.randint(-5, 5), rng.randint(1, 5))
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)
        assert (p - q)(x) == p(x) - q(x)
        if not q.is_zero:
            quo, rem = divmod(p, q)
            assert quo * q + rem == p
            assert rem.is_zero or rem.degree < q.degree


def test_gcd_divides_both():
    p = RatPoly((-1, 0, 1)) * RatPoly((2, 1))  # (x^2-1)(x+2)
    q = RatPoly((1, 1)) * RatPoly((2, 1)) * 3  # 3(x+1)(x+2)
    g = poly_gcd(p, q)
    assert g == RatPoly((1, 1)) * RatPoly((2, 1))
    assert (p % g).is_zero and (q % g).is_zero


def test_root_counting():
    p = RatPoly((-1, 1)) * RatPoly((-2, 1)) * RatPoly((3, 1))  # roots 1, 2, -3
    assert count_positive_roots(p) == 2
    assert count_real_roots(p) == 3
    assert count_real_roots(p, hi=F(0)) == 1
    assert count_positive_roots(RatPoly((1, 0, 1))) == 0
    # repeated roots are counted once
    assert count_positive_roots(RatPoly((-1, 1)) ** 3) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_laguerre_oscillation(n):
    assert count_positive_roots(laguerre(n, F(1, 2))) == n


def test_ratfun_reduction_and_arithmetic():
    f = RatFun(RatPoly((0, 2)), RatPoly((0, 0, 4)))  # 2x / 4x^2 = 1/(2x)
    assert f.num == RatPoly((F(1, 2),)) and f.den == RatPoly((0, 1))
    g = RatFun(RatPoly((1,)), RatPoly((0, 1)))
    assert f + f == g
    assert (f * 2) == g
    # quotient rule, checked at a rational point
    h = RatFun(RatPoly((1, 1)), RatPoly((2, 0, 1)))
    x = F(3, 2)
    eps_free = h.derivative()(x)
    num, den = RatPoly((1, 1)), RatPoly((2, 0, 1))
    expected = (num.derivative()(x) * den(x) - num(x) * den.derivative()(x)) / den(x) ** 2
    assert eps_free == expected


def test_coefficients_must_be_rational():
    with pytest.raises(TypeError):
        RatPoly((0.5, 1))


def test_json_round_trip():
    p = RatPoly((F(45, 4), 0, -1))
    assert poly_from_json(poly_to_json(p)) == p
    assert poly_to_json(p) == ["45/4", "0", "-1"]
