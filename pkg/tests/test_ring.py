from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcodes import (
    Ideal,
    conjugate,
    construct_field,
    gray_Phi,
    gray_phi,
    gray_phi_inv,
    ideal_collapse,
    ideal_dual,
    is_unit,
    make_ring,
    maximal_ideals,
    pi_project,
    ring_mul,
    theta_combine,
    theta_decompose,
)
from bkcodes.errors import LevelOutOfRange, ShapeMismatch
from bkcodes.ring import dual_formula_generator, unit_count

import oracles

RINGS = [(2, 1, 1), (2, 1, 2), (2, 1, 3), (3, 1, 1), (2, 2, 1)]


def ring(p, r, k):
    return make_ring(construct_field(p, r), k)


@st.composite
def ring_and_elements(draw, count=2):
    R = ring(*draw(st.sampled_from(RINGS)))
    els = [R.from_index(draw(st.integers(0, R.size - 1))) for _ in range(count)]
    return R, els


@settings(max_examples=200, deadline=None)
@given(ring_and_elements(3))
def test_multiplication_matches_union_rule(case):
    R, (a, b, c) = case
    assert (a * b).coeffs == oracles.ring_mul(R, a.coeffs, b.coeffs)
    assert ring_mul(R, a, b) == a * b
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=200, deadline=None)
@given(ring_and_elements(2))
def test_conjugation_is_substitution(case):
    R, (a, b) = case
    assert conjugate(R, a).coeffs == oracles.conjugate(R, a.coeffs)
    assert conjugate(R, conjugate(R, a)) == a
    assert conjugate(R, a * b) == conjugate(R, a) * conjugate(R, b)


@pytest.mark.parametrize("prk", RINGS)
def test_gray_maps_bijective_and_equal(prk):
    R = ring(*prk)
    images = set()
    for a in R.elements():
        g = gray_phi(R, a)
        assert gray_Phi(R, a) == g
        assert gray_phi_inv(R, g) == a
        images.add(g)
    assert len(images) == R.size


def test_phi_of_one_minus_v():
    F = construct_field(2, 2)
    R = make_ring(F, 1)
    assert gray_phi(R, R.one - R.v(1)) == (1, 0)


def test_v_j_evaluates_on_its_bit():
    R = ring(3, 1, 3)
    for j in range(1, 4):
        assert gray_phi(R, R.v(j)) == tuple(1 if s >> (j - 1) & 1 else 0 for s in range(8))


@pytest.mark.parametrize("prk", RINGS)
def test_units_are_nonvanishing(prk):
    R = ring(*prk)
    units = [a for a in R.elements() if is_unit(R, a)]
    assert len(units) == unit_count(R)
    for a in units:
        assert any(a * b == R.one for b in R.elements())


def test_powers_and_scalars():
    R = ring(3, 1, 2)
    a = R.element([1, 2, 0, 1])
    assert a**3 == a * a * a
    assert a * 2 == a + a
    assert a**0 == R.one


def test_element_validation():
    R = ring(2, 2, 1)
    with pytest.raises(ShapeMismatch):
        R.element([0, 4])
    with pytest.raises(ShapeMismatch):
        R.from_wire([[1, 0]])
    assert R.from_wire([[1, 0], [0, 1]]).coeffs == (1, 2)
    assert R.from_wire([[1, 0], [0, 1]]).wire() == [[1, 0], [0, 1]]


def test_index_is_colex_over_subsets():
    R = ring(3, 1, 1)
    assert R.element([2, 1]).index == 2 + 3 * 1
    assert [R.from_index(i).coeffs for i in range(4)] == [(0, 0), (1, 0), (2, 0), (0, 1)]


def test_pi_projection_round_trip():
    F = construct_field(2)
    R2, R1 = make_ring(F, 2), make_ring(F, 1)
    for a in R2.elements():
        parts = pi_project(R2, a, 1)
        assert len(parts) == 2
        assert sum((gray_phi(R1, x) for x in parts), ()) == gray_phi(R2, a)
    with pytest.raises(LevelOutOfRange):
        pi_project(R1, R1.one, 1)


def test_theta_round_trip_and_maximal_ideals():
    R = ring(2, 2, 2)
    for a in list(R.elements())[:200]:
        assert theta_combine(R, theta_decompose(R, a)) == a
    for i, M in enumerate(maximal_ideals(R)):
        elems = oracles.ideal_closure(R, [g.coeffs for g in M.generators])
        assert len(elems) == R.size // R.q
        # the kernel of evaluation at point i
        assert all(R.element(e).gray[i] == 0 for e in elems)


@pytest.mark.parametrize("prk", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_ideals_match_closure(prk):
    R = ring(*prk)
    for g in R.elements():
        I = Ideal.of(R, g)
        assert I.elements() == {R.element(e).index for e in oracles.principal_ideal(R, g.coeffs)}


@pytest.mark.parametrize("prk", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_collapse_generates_same_ideal(prk):
    R = ring(*prk)
    rng = np.random.default_rng(7)
    for _ in range(60):
        gens = [R.from_index(int(i)) for i in rng.integers(0, R.size, size=int(rng.integers(1, 4)))]
        single = ideal_collapse(Ideal(R, tuple(gens)))
        closure = oracles.ideal_closure(R, [g.coeffs for g in gens])
        assert oracles.principal_ideal(R, single.coeffs) == closure


@pytest.mark.parametrize("prk", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_annihilator_method_is_exact(prk):
    R = ring(*prk)
    for g in R.elements():
        ideal = oracles.principal_ideal(R, g.coeffs)
        ann = oracles.annihilator(R, ideal)
        got = ideal_dual(Ideal.of(R, g), method="crt").elements()
        assert got == {R.element(e).index for e in ann}
        herm = ideal_dual(Ideal.of(R, g), mode="hermitian", method="crt").elements()
        assert herm == {R.element(oracles.conjugate(R, e)).index for e in ann}


@pytest.mark.parametrize("prk", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_closed_form_generator_lies_in_annihilator(prk):
    R = ring(*prk)
    for g in R.elements():
        d = dual_formula_generator(R, g)
        assert (d * g).is_zero()


@pytest.mark.parametrize("prk", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_closed_form_exact_on_monomials(prk):
    R = ring(*prk)
    for S in range(R.m):
        for c in range(1, R.q):
            g = R.monomial(S, c)
            ann = oracles.annihilator(R, oracles.principal_ideal(R, g.coeffs))
            got = ideal_dual(Ideal.of(R, g)).elements()
            assert got == {R.element(e).index for e in ann}


def test_closed_form_misses_binomial_annihilator():
    # over F_2, Ann(<1 + v>) = <v> but the closed form yields 0
    R = ring(2, 1, 1)
    g = R.one + R.v(1)
    assert dual_formula_generator(R, g).is_zero()
    assert ideal_dual(Ideal.of(R, g), method="crt").same_as(Ideal.of(R, R.v(1)))


def test_hermitian_dual_of_v2_at_k3():
    R = ring(2, 1, 3)
    I = Ideal.of(R, R.v(2))
    for method in ("formula", "crt"):
        assert ideal_dual(I, mode="hermitian", method=method).same_as(I)
