from __future__ import annotations

import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcodes import construct_field
from bkcodes.errors import DegreeMismatch, DivisionByZero, NotPrime, ReduciblePolynomial
from bkcodes.field import is_irreducible, is_prime, smallest_irreducible

from oracles import naive_field_mul

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5), (7, 2)]


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_tables_match_schoolbook_arithmetic(p, r):
    F = construct_field(p, r)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul[a, b] == naive_field_mul(F, a, b)
            da, db = F.coeffs(a), F.coeffs(b)
            assert F.coeffs(int(F.add[a, b])) == [(x + y) % p for x, y in zip(da, db)]
            assert F.add[F.sub[a, b], b] == a


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_field_axioms(p, r):
    F = construct_field(p, r)
    q = F.q
    idx = np.arange(q)
    assert np.array_equal(F.mul, F.mul.T)
    assert np.array_equal(F.mul[1], idx)
    nz = idx[1:]
    assert np.all(F.mul[nz, F.inv[nz]] == 1)
    # associativity and distributivity on the full cube
    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    assert np.array_equal(F.mul[F.mul[a, b], c], F.mul[a, F.mul[b, c]])
    assert np.array_equal(F.mul[a, F.add[b, c]], F.add[F.mul[a, b], F.mul[a, c]])
    # multiplicative group is cyclic of order q - 1
    assert any(len({F.power(g, e) for e in range(q - 1)}) == q - 1 for g in nz)


def test_f4_example_values():
    F = construct_field(2, 2)
    assert list(F.irr) == [1, 1, 1]
    a = F.alpha
    assert F.mul_(a, a) == F.add[a, 1]  # a^2 = a + 1
    assert F.base_weight(F.add[a, 1]) == 2
    assert F.name(F.add[a, 1]) == "a+1"


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        construct_field(5).inverse(0)


@pytest.mark.parametrize("bad", [1, 4, 9, 15])
def test_non_prime_rejected(bad):
    with pytest.raises(NotPrime):
        construct_field(bad)


def test_bad_polynomials_rejected():
    with pytest.raises(ReduciblePolynomial):
        construct_field(2, 2, [1, 0, 1])  # (x+1)^2
    with pytest.raises(DegreeMismatch):
        construct_field(2, 2, [1, 1])
    with pytest.raises(DegreeMismatch):
        construct_field(2, 0)


def test_cache_and_pickle():
    F = construct_field(3, 2)
    assert construct_field(3, 2) is F
    assert pickle.loads(pickle.dumps(F)) is F


def _count_irreducible(p: int, d: int) -> int:
    # Gauss: (1/d) Σ_{e|d} μ(e) p^{d/e}
    def mu(n):
        out, m, f = 1, n, 2
        while f * f <= m:
            if m % f == 0:
                m //= f
                if m % f == 0:
                    return 0
                out = -out
            f += 1
        return -out if m > 1 else out

    return sum(mu(e) * p ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2)])
def test_irreducible_count(p, d):
    import itertools

    n = sum(is_irreducible(list(c) + [1], p) for c in itertools.product(range(p), repeat=d))
    assert n == _count_irreducible(p, d)


def test_smallest_irreducible_is_first_in_order():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    assert smallest_irreducible(2, 3) == (1, 0, 1, 1)  # 1 + x^2 + x^3


@given(st.integers(min_value=-5, max_value=500))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == (n > 1 and all(n % d for d in range(2, n)))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_power_matches_repeated_product(pr, data):
    F = construct_field(*pr)
    a = data.draw(st.integers(0, F.q - 1))
    e = data.draw(st.integers(0, 3 * F.q))
    acc = 1
    for _ in range(e):
        acc = F.mul_(acc, a)
    assert F.power(a, e) == acc
