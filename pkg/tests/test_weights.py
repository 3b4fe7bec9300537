from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcodes import char_matrix, code_new, construct_field, cwe, dual, lee_weight, macwilliams, make_ring, swe, unit_classes
from bkcodes.codes import EUCLIDEAN, HERMITIAN, random_code
from bkcodes.cycint import CycInt
from bkcodes.errors import KindMismatch, MatrixTooLarge, NonIntegralResult
from bkcodes.weights import (
    field_weight_distribution,
    fold_to_swe,
    full_S,
    hamming_macwilliams,
    hamming_we,
    lee_we,
)
from bkcodes.cycint import reduce_group_ring

import oracles

DESK = [(2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2)]


def ring(p, r, k):
    return make_ring(construct_field(p, r), k)


@pytest.mark.parametrize("prk", DESK + [(3, 1, 2), (5, 1, 1)])
def test_lee_table_matches_definition(prk):
    R = ring(*prk)
    for a in R.elements():
        assert lee_weight(R, [a]) == oracles.lee_of(R, a.coeffs)


def test_lee_weight_of_one_minus_v():
    R = ring(2, 2, 1)
    assert lee_weight(R, [R.one - R.v(1)]) == 1
    assert lee_weight(R, [R.scalar(R.field.alpha)]) == 2


@pytest.mark.parametrize("prk", DESK + [(3, 1, 2)])
def test_unit_classes_are_unit_orbits(prk):
    R = ring(*prk)
    units = [u for u in R.elements() if all(u.gray)]
    uc = unit_classes(R)
    for a in R.elements():
        orbit = {(u * a).index for u in units}
        members = set(np.flatnonzero(uc.class_of == uc.class_of[a.index]).tolist())
        assert orbit == members
    assert len(uc.reps) == 2**R.m
    assert sum(uc.sizes) == R.size


@pytest.mark.parametrize("prk", DESK)
def test_s_rows_constant_on_classes(prk):
    R = ring(*prk)
    uc = unit_classes(R)
    S = reduce_group_ring(full_S(R))
    for cls in range(len(uc.reps)):
        rows = S[uc.class_of == cls]
        assert (rows == rows[0]).all()


def test_character_values_are_roots_of_unity():
    R = ring(3, 1, 1)
    T = char_matrix(R, "T")
    xi = np.exp(2j * np.pi / 3)
    for a in range(R.size):
        for b in range(R.size):
            prod = R.mul_indices(np.array(a), np.array(b))
            expected = xi ** int(R.lee_table[prod])
            assert abs(T.entry(a, b).to_complex() - expected) < 1e-9


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(DESK), st.integers(1, 2), st.integers(0, 10**6))
def test_cwe_matches_oracle(prk, n, seed):
    R = ring(*prk)
    C = random_code(R, n, np.random.default_rng(seed))
    words = oracles.span_module(R, n, list(C.generators))
    assert cwe(C).terms == oracles.complete_enumerator(R, words)
    assert cwe(C).total() == C.cardinality


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DESK), st.integers(1, 2), st.integers(0, 10**6))
def test_macwilliams_all_kinds(prk, n, seed):
    R = ring(*prk)
    C = random_code(R, n, np.random.default_rng(seed))
    W = cwe(C)
    assert macwilliams(W, char_matrix(R, "T"), C.cardinality) == cwe(dual(C, EUCLIDEAN))
    assert macwilliams(W, char_matrix(R, "T_H"), C.cardinality) == cwe(dual(C, HERMITIAN))
    assert macwilliams(swe(C), char_matrix(R, "S"), C.cardinality) == swe(dual(C, EUCLIDEAN))


def test_fold_and_scalar_enumerators():
    R = ring(2, 1, 1)
    C = code_new(R, 2, [np.array([[1, 0], [0, 1]])])
    assert fold_to_swe(cwe(C), R) == swe(C)
    H, L = hamming_we(C), lee_we(C)
    assert H.total() == L.total() == C.cardinality
    words = C.codewords()
    ham = np.bincount((words != 0).sum(axis=1))
    assert H.terms == {(w,): int(c) for w, c in enumerate(ham) if c}
    lee = np.bincount(R.lee_table[words].sum(axis=1))
    assert L.terms == {(w,): int(c) for w, c in enumerate(lee) if c}


def test_divisibility_is_enforced():
    R = ring(2, 1, 1)
    C = code_new(R, 1, [np.array([[0, 1]])])
    with pytest.raises(NonIntegralResult):
        macwilliams(cwe(C), char_matrix(R, "T"), 3)


def test_kind_mismatch():
    R = ring(2, 1, 1)
    C = code_new(R, 1, [np.array([[0, 1]])])
    with pytest.raises(KindMismatch):
        macwilliams(swe(C), char_matrix(R, "T"), C.cardinality)
    with pytest.raises(KindMismatch):
        char_matrix(R, "Q")


def test_matrix_cap():
    with pytest.raises(MatrixTooLarge):
        char_matrix(ring(2, 2, 2), "T", cap=16)


def test_hamming_macwilliams_on_hamming_code():
    F = construct_field(2)
    G = np.array([[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]])
    dist = field_weight_distribution(G, F)
    assert dist == [1, 0, 0, 7, 7, 0, 0, 1]
    assert hamming_macwilliams(dist, 2) == [1, 0, 0, 0, 7, 0, 0, 0]


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 5]), st.data())
def test_cycint_ring_laws(p, data):
    coeff = st.lists(st.integers(-5, 5), min_size=p, max_size=p)
    a, b, c = (CycInt(p, data.draw(coeff)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6


def test_cycint_sum_of_roots_is_zero():
    for p in (2, 3, 5, 7):
        total = sum((CycInt.xi_power(p, e) for e in range(p)), CycInt.integer(p, 0))
        assert total == 0
        assert int(CycInt.xi_power(p, 0)) == 1
    with pytest.raises(ValueError):
        int(CycInt.xi_power(3, 1))
