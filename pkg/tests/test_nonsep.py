"""Tests for the unsigned (non-separating) transition model."""

from fractions import Fraction

import pytest

from realhurwitz.nonsep import (
    TildeType,
    tilde_canonical_key,
    tilde_class_members,
    tilde_class_size,
    tilde_class_size_formula,
    tilde_classify,
    tilde_compare_operator,
    tilde_connected_value,
    tilde_enumerate_types,
    tilde_euler_characteristic,
    tilde_evolve,
    tilde_hurwitz,
    tilde_initial_vector,
    tilde_operator_matrix,
    tilde_representative,
    tilde_states,
    tilde_table_rows,
    tilde_zeta,
    ttype,
)

EMPTY = frozenset()
PAIR01 = frozenset({(0, 1)})


def test_state_counts_are_involution_numbers():
    assert [len(tilde_states(n)) for n in range(6)] == [1, 1, 2, 4, 10, 26]


def test_ttype_validates_parity():
    with pytest.raises(ValueError):
        ttype(kappa_plus=(3,))
    with pytest.raises(ValueError):
        ttype(kappa_minus=(1,))
    with pytest.raises(ValueError):
        ttype(kappa_odd=(2,))
    mu = ttype(kappa_plus=(2,), kappa_odd=(3, 1), lam=(1,))
    assert mu.degree == 2 + 4 + 2


def test_classify_small_transitions():
    assert tilde_classify((EMPTY, EMPTY), 2) == ttype(kappa_odd=(1, 1))
    assert tilde_classify((PAIR01, PAIR01), 2) == ttype(lam=(1,))
    assert tilde_classify((EMPTY, PAIR01), 2) == ttype(kappa_plus=(2,))
    assert tilde_classify((PAIR01, EMPTY), 2) == ttype(kappa_minus=(2,))


def test_representative_round_trip():
    for n in range(6):
        for mu in tilde_enumerate_types(n):
            t = tilde_representative(mu)
            assert tilde_classify(t, n) == mu


def test_class_sizes_match_formula():
    for n in range(6):
        for mu in tilde_enumerate_types(n):
            assert tilde_class_size(mu) == tilde_class_size_formula(mu)
            assert tilde_class_size(mu) == len(tilde_class_members(mu))


def test_zeta_examples():
    assert tilde_zeta(ttype(kappa_odd=(1, 1))) == 2
    assert tilde_zeta(ttype(kappa_plus=(2,))) == 2
    assert tilde_zeta(ttype(lam=(1,))) == 2
    assert tilde_zeta(ttype(lam=(2,))) == 4
    assert tilde_zeta(ttype(kappa_plus=(2, 2))) == 8


def test_euler_characteristic():
    assert tilde_euler_characteristic(ttype(kappa_odd=(3,)), 6) == -2
    assert tilde_euler_characteristic(ttype(kappa_odd=(1,)), 0) == 2
    assert tilde_euler_characteristic(ttype(lam=(1,)), 0) == 4


def test_operator_matrix_agrees_with_transcribed_form():
    for n in range(6):
        comparison = tilde_compare_operator(n)
        assert comparison.agrees, comparison.mismatches


def test_initial_vector_weights():
    v = tilde_initial_vector(2)
    assert v.coeff(ttype(kappa_odd=(1, 1))) == Fraction(1, 2)
    assert v.coeff(ttype(lam=(1,))) == Fraction(1, 2)


def test_evolution_matches_walk_counts():
    for n in range(6):
        evolved = tilde_evolve(n, 6)
        for m in range(7):
            assert dict(evolved[m]) == tilde_hurwitz(n, m)


def test_hurwitz_single_element():
    assert tilde_hurwitz(1, 0) == {ttype(kappa_odd=(1,)): Fraction(1)}
    assert tilde_hurwitz(1, 1) == {}


def test_connected_unsigned_count_nine():
    mu = ttype(kappa_odd=(3,))
    assert tilde_connected_value(mu, 6) == 9


def test_connected_odd_single_pole_probe():
    # Odd-order unsigned counts coincide with the signed zigzag at odd index.
    got = [tilde_connected_value(ttype(kappa_odd=(n,)), n - 1) for n in (1, 3, 5)]
    assert got == [1, 1, 5]


def test_table_rows_sorted_by_canonical_key():
    rows = tilde_table_rows(3, 4, connected=True)
    assert all(r.value != 0 for r in rows)
    keys = [(r.m, tilde_canonical_key(r.mu)) for r in rows]
    assert keys == sorted(keys)


def test_operator_matrix_on_two_elements_is_a_permutation():
    tm = tilde_operator_matrix(2)
    assert len(tm.basis) == len(tilde_enumerate_types(2)) == 4
    index = {mu: i for i, mu in enumerate(tm.basis)}
    identities = {index[ttype(kappa_odd=(1, 1))], index[ttype(lam=(1,))]}
    switches = {index[ttype(kappa_plus=(2,))], index[ttype(kappa_minus=(2,))]}
    for j in range(4):
        col = [tm.entries[i][j] for i in range(4)]
        assert sorted(col) == [0, 0, 0, 1]
        hit = col.index(1)
        # One step always flips between identity classes and switch classes.
        assert (hit in switches) == (j in identities)
