from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcodes import code_new, construct_field, crt_combine, dual, make_ring, min_distance, rank_identity_check, singleton_report
from bkcodes.bounds import INF, hamming_distance_components
from bkcodes.codes import EUCLIDEAN, full_code, random_code, zero_code
from bkcodes.search import subspaces
from bkcodes import linalg

PARAMS = [(2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2)]


def ring(p, r, k):
    return make_ring(construct_field(p, r), k)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PARAMS), st.integers(1, 3), st.integers(0, 10**6))
def test_distances_by_components_match_enumeration(prk, n, seed):
    R = ring(*prk)
    C = random_code(R, n, np.random.default_rng(seed))
    for metric in ("hamming", "lee"):
        assert min_distance(C, metric, "enumerate") == min_distance(C, metric, "components")
    assert min_distance(C, "hamming") == hamming_distance_components(C)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PARAMS), st.integers(1, 3), st.integers(0, 10**6))
def test_bounds_hold(prk, n, seed):
    R = ring(*prk)
    C = random_code(R, n, np.random.default_rng(seed))
    rep = singleton_report(C)
    assert all(rep.inequalities_hold().values())
    if rep.is_free and rep.is_MDR:
        assert rep.is_MDS
    if rep.free_mldr_implies_mlds is not None:
        assert rep.free_mldr_implies_mlds


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PARAMS), st.integers(1, 4), st.integers(0, 10**6))
def test_corrected_rank_identity(prk, n, seed):
    R = ring(*prk)
    C = random_code(R, n, np.random.default_rng(seed))
    chk = rank_identity_check(C)
    assert chk.corrected_form_holds
    assert chk.rank + chk.dual_free_rank == n


def test_rank_plus_free_rank_fails_for_full_space():
    R = ring(2, 1, 1)
    chk = rank_identity_check(full_code(R, 2))
    assert (chk.rank, chk.free_rank) == (2, 2)
    assert not chk.naive_form_holds
    assert chk.corrected_form_holds


def test_zero_code_report():
    R = ring(2, 1, 1)
    rep = singleton_report(zero_code(R, 2))
    assert rep.d_H == INF and rep.d_L == INF
    assert not (rep.is_MDS or rep.is_MDR or rep.is_MLDS or rep.is_MLDR)
    assert rep.as_dict()["d_H"] is None


def test_repetition_code_is_mds():
    # <(1,1)> over B_1/F_2 has 4 words and distance 2, and 4 * 4^(2-1) = 4^2
    R = ring(2, 1, 1)
    C = code_new(R, 2, [np.array([[1, 0], [1, 0]])])
    rep = singleton_report(C)
    assert (C.cardinality, rep.d_H) == (4, 2)
    assert rep.singleton_H == Fraction(2)
    assert rep.is_MDS and rep.is_MDR


SELF_DUAL_MDS = [
    (2, 1, [[1, 1]]),
    (5, 1, [[1, 2]]),
    (3, 1, [[1, 0, 1, 1], [0, 1, 1, 2]]),  # tetracode
]


@pytest.mark.parametrize("p,r,rows", SELF_DUAL_MDS)
@pytest.mark.parametrize("k", [1, 2])
def test_crt_of_mds_self_dual_components(p, r, rows, k):
    R = make_ring(construct_field(p, r), k)
    G = np.array(rows, dtype=np.int64)
    n = G.shape[1]
    C = crt_combine(R, n, [G] * R.m)
    assert C == dual(C, EUCLIDEAN)
    assert singleton_report(C).is_MDS


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_mdr_construction_exhaustive(q, n):
    p, r = {2: (2, 1), 3: (3, 1), 4: (2, 2)}[q]
    F = construct_field(p, r)
    R = make_ring(F, 1)
    spaces = list(subspaces(F, n))
    info = [(s.shape[0], linalg.min_weight(s, F)) for s in spaces]
    checked = 0
    for a, b in itertools.product(range(len(spaces)), repeat=2):
        (ra, da), (rb, db) = info[a], info[b]
        for (rj, dj), (ri, di) in (((ra, da), (rb, db)), ((rb, db), (ra, da))):
            mds_j = rj > 0 and dj == n - rj + 1
            if mds_j and ri <= rj and di >= dj:
                C = crt_combine(R, n, [spaces[a], spaces[b]])
                assert singleton_report(C).is_MDR
                checked += 1
                break
    assert checked > 0


def test_mlds_family():
    R = ring(2, 2, 1)
    verdicts = {}
    for n in range(1, 5):
        C = code_new(R, n, [np.array([[1, 0]] * n)])
        rep = singleton_report(C)
        assert C.cardinality == 16
        assert rep.d_L == n
        verdicts[n] = rep.is_MLDS
    assert verdicts == {1: True, 2: False, 3: False, 4: False}
