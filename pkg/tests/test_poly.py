"""Tests for sparse polynomial vectors and exponential series transforms."""

from fractions import Fraction

import pytest

from realhurwitz.model import EMPTY_TYPE, p_minus, p_plus, q_var, rtype, zeta
from realhurwitz.poly import (
    PolyVector,
    USeries,
    scalar_product,
    series_exp,
    series_log,
    series_mul,
    vector_bidegree,
)


def vec(*pairs):
    return PolyVector({mu: Fraction(c) for mu, c in pairs})


def test_monomial_and_coeff():
    v = PolyVector.monomial(p_plus(2), Fraction(3))
    assert v.coeff(p_plus(2)) == 3
    assert v.coeff(p_plus(1)) == 0


def test_zero_coefficients_are_dropped():
    v = vec((p_plus(1), 1)) - vec((p_plus(1), 1))
    assert not v.terms
    assert v == PolyVector.zero()


def test_add_scale():
    v = vec((p_plus(1), 1), (q_var(1), 2))
    w = v + v.scale(Fraction(1, 2))
    assert w.coeff(p_plus(1)) == Fraction(3, 2)
    assert w.coeff(q_var(1)) == 3


def test_mul_merges_types():
    v = vec((p_plus(2), 1))
    w = vec((p_minus(1), 1), (q_var(1), 1))
    prod = v.mul(w)
    assert prod.coeff(rtype((2,), (1,))) == 1
    assert prod.coeff(rtype((2,), (), (1,))) == 1


def test_mul_respects_degree_cap():
    v = vec((p_plus(2), 1), (p_plus(1), 1))
    prod = v.mul(v, max_degree=3)
    assert prod.coeff(rtype((1, 1), ())) == 1
    assert prod.coeff(rtype((2, 1), ())) == 2
    assert prod.coeff(rtype((2, 2), ())) == 0


def test_mul_collects_automorphic_monomials():
    v = vec((p_plus(1), 1))
    assert v.mul(v).coeff(rtype((1, 1), ())) == 1


def test_restrict_degree():
    v = vec((p_plus(1), 1), (p_plus(3), 1))
    assert v.restrict_degree(2) == vec((p_plus(1), 1))


def test_vector_bidegree_on_homogeneous_input():
    v = vec((q_var(1), 1), (rtype((1,), (1,)), 2))
    assert vector_bidegree(v) == (1, 1)


def test_scalar_product_diagonal():
    a = vec((p_plus(2), 1), (q_var(1), 3))
    b = vec((p_plus(2), 5), (p_minus(1), 7))
    assert scalar_product(a, b) == 5 * zeta(p_plus(2))
    assert scalar_product(a, a) == zeta(p_plus(2)) + 9 * zeta(q_var(1))


def test_useries_coeff_pads_with_zero():
    s = USeries((vec((p_plus(1), 1)),), connected=True)
    assert s.coeff(0).coeff(p_plus(1)) == 1
    assert s.coeff(5) == PolyVector.zero()


def test_series_mul_uses_binomial_convolution():
    # (sum p_1 u^m/m!) squared has coefficient 2^m p_1^2 at u^m/m!.
    one = vec((p_plus(1), 1))
    s = USeries(tuple(one for _ in range(4)), connected=False)
    sq = series_mul(s, s, 3, 10)
    for m in range(4):
        assert sq.coeff(m).coeff(rtype((1, 1), ())) == 2 ** m


def test_series_exp_log_roundtrip():
    h = USeries(
        (vec((p_plus(1), 1), (q_var(1), Fraction(1, 2))),
         vec((p_plus(2), 1)),
         vec((p_plus(3), 2), (p_minus(1), 1))),
        connected=True)
    big = series_exp(h, 2, 6)
    assert big.coeff(0).coeff(EMPTY_TYPE) == 1
    back = series_log(big, 2, 6)
    for m in range(3):
        assert back.coeff(m) == h.coeff(m)


def test_series_exp_constant_term_is_exponential():
    zero = USeries((PolyVector.zero(),), connected=True)
    big = series_exp(zero, 3, 4)
    for m in range(4):
        assert big.coeff(m) == (vec((EMPTY_TYPE, 1)) if m == 0 else PolyVector.zero())


def test_series_log_requires_unit_constant():
    bad = USeries((PolyVector.zero(),), connected=False)
    with pytest.raises(ValueError):
        series_log(bad, 0, 2)
