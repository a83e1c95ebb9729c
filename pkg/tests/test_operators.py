"""Tests for the cut-and-join operators and the genus-zero flow terms."""

from fractions import Fraction

import pytest

from realhurwitz.model import (
    Bidegree,
    bidegree,
    enumerate_bidegrees,
    enumerate_types,
    euler_characteristic,
    p_minus,
    p_plus,
    q_var,
    rtype,
    zeta,
)
from realhurwitz.operators import (
    CHI_SHIFTS,
    G0Type,
    G0_EMPTY,
    G0_P2,
    OperatorKind,
    apply,
    block_matrix,
    g0_from_type,
    genus0_cut,
    genus0_join,
    genus0_qterm,
    genus0_rhs,
    wplus_images,
)
from realhurwitz.oracle import mult_c2_matrix
from realhurwitz.poly import PolyVector


def mono(mu):
    return PolyVector.monomial(mu)


def as_dict(v):
    return {mu: c for mu, c in v}


def test_wplus_on_block_1_1_permutes_the_basis():
    assert as_dict(apply(OperatorKind.WPLUS, mono(rtype((1,), (1,))))) == {
        p_minus(2): Fraction(1)}
    assert as_dict(apply(OperatorKind.WPLUS, mono(q_var(1)))) == {
        p_plus(2): Fraction(1)}
    assert as_dict(apply(OperatorKind.WPLUS, mono(p_plus(2)))) == {
        q_var(1): Fraction(1)}
    assert as_dict(apply(OperatorKind.WPLUS, mono(p_minus(2)))) == {
        rtype((1,), (1,)): Fraction(1)}


def test_wplus_cut_of_negative_order_four_pole():
    # A negative pole only splits into an odd negative and an odd positive
    # part; the pair-pole term exists for even positive parts only.
    got = as_dict(apply(OperatorKind.WPLUS, mono(p_minus(4))))
    assert got == {
        rtype((3,), (1,)): Fraction(1),
        rtype((1,), (3,)): Fraction(1),
    }


def test_wminus_is_the_sign_swap_conjugate():
    for b in enumerate_bidegrees(4):
        for mu in enumerate_types(b):
            swapped = rtype(mu.kappa_minus, mu.kappa_plus, mu.lam)
            plus = apply(OperatorKind.WPLUS, mono(swapped))
            direct = apply(OperatorKind.WMINUS, mono(mu))
            mirrored = {rtype(nu.kappa_minus, nu.kappa_plus, nu.lam): c
                        for nu, c in plus}
            assert as_dict(direct) == mirrored


def test_wmean_is_the_average():
    v = mono(p_plus(4)) + mono(q_var(2))
    left = apply(OperatorKind.WPLUS, v)
    right = apply(OperatorKind.WMINUS, v)
    mean = apply(OperatorKind.WMEAN, v)
    assert mean == (left + right).scale(Fraction(1, 2))


def test_images_preserve_bidegree():
    for b in enumerate_bidegrees(5):
        for mu in enumerate_types(b):
            for nu, mult, _ in wplus_images(mu):
                assert mult > 0
                assert bidegree(nu) == Bidegree(*b)


def test_chi_shifts_match_term_metadata():
    # chi(nu, m+1) - chi(mu, m) for each image term equals the declared shift,
    # so applying the operator moves counts along constant-chi lines.
    assert set(CHI_SHIFTS.values()) == {0, -2}
    for b in enumerate_bidegrees(5):
        for mu in enumerate_types(b):
            for nu, _, shift in wplus_images(mu):
                m = 7
                assert (euler_characteristic(nu, m + 1)
                        - euler_characteristic(mu, m)) == shift


def test_block_matrix_equals_class_multiplication():
    for b in enumerate_bidegrees(5):
        wp = block_matrix(OperatorKind.WPLUS, b)
        wm = block_matrix(OperatorKind.WMINUS, b)
        assert wp.basis == tuple(enumerate_types(b))
        assert wp.entries == mult_c2_matrix(b, "left")
        assert wm.entries == mult_c2_matrix(b, "right")


def test_block_matrix_is_zeta_self_adjoint():
    for b in enumerate_bidegrees(5):
        for kind in OperatorKind:
            bm = block_matrix(kind, b)
            zs = [zeta(mu) for mu in bm.basis]
            n = len(bm.basis)
            for i in range(n):
                for j in range(n):
                    assert bm.entries[i][j] * zs[i] == bm.entries[j][i] * zs[j]


def test_block_matrix_matvec_matches_apply():
    b = Bidegree(2, 1)
    bm = block_matrix(OperatorKind.WPLUS, b)
    vec = [Fraction(k + 1) for k in range(len(bm.basis))]
    poly = PolyVector({mu: c for mu, c in zip(bm.basis, vec)})
    image = apply(OperatorKind.WPLUS, poly)
    assert bm.matvec(vec) == [image.coeff(mu) for mu in bm.basis]


def test_g0_from_type_forgets_signs():
    mu = rtype((3, 1), (2,), (2,))
    assert g0_from_type(mu) == G0Type((3, 2, 1), (2,))
    assert g0_from_type(rtype((), (), ())) == G0_EMPTY


def test_genus0_cut_splits_ordered():
    v = PolyVector.monomial(G0Type((3,), ()))
    got = as_dict(genus0_cut(v))
    assert got == {G0Type((2, 1), ()): Fraction(2)}


def test_genus0_join_weights_by_multiplicity():
    f = PolyVector.monomial(G0Type((1, 1), ()))
    g = PolyVector.monomial(G0Type((2,), ()))
    got = as_dict(genus0_join(f, g))
    assert got == {G0Type((3, 1), ()): Fraction(2)}


def test_genus0_qterm():
    v = PolyVector.monomial(G0Type((4, 1), ()))
    got = as_dict(genus0_qterm(v))
    assert got == {G0Type((1,), (2,)): Fraction(1)}


def test_genus0_rhs_of_single_part_two():
    got = as_dict(genus0_rhs(PolyVector.monomial(G0Type((2,), ()))))
    assert got == {
        G0Type((1, 1), ()): Fraction(1, 2),
        G0Type((), (1,)): Fraction(1, 2),
        G0Type((4,), ()): Fraction(1, 2),
        G0Type((2,), ()): Fraction(1, 2),
    }


def test_apply_rejects_foreign_keys():
    with pytest.raises(AttributeError):
        apply(OperatorKind.WPLUS, PolyVector.monomial(G0Type((2,), ())))
