"""Finite fields F_{p^r} over the polynomial basis ``1, x, ..., x^(r-1)``.

An element is stored as the integer code ``sum_i c_i * p**i`` of its
coefficient vector ``(c_0, ..., c_{r-1})``; all arithmetic is by table
lookup.  The wire form of an element is the coefficient list itself.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence

import numpy as np

from .errors import DegreeMismatch, DivisionByZero, NotPrime, ReduciblePolynomial, ShapeMismatch

#: Largest field order for which full q x q tables are built.
MAX_ORDER = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomials over Z_p as coefficient lists, constant term first --------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _monic_polys(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over Z_p.

    Degree <= 4 uses trial division by every monic polynomial of degree
    up to ``deg/2``; larger degrees use Ben-Or's gcd test.
    """
    f = _trim([x % p for x in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if d <= 4:
        for e in range(1, d // 2 + 1):
            for g in _monic_polys(p, e):
                if not _pmod(f, g, p):
                    return False
        return True
    x = [0, 1]
    xp = x
    for _ in range(1, d // 2 + 1):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r``.

    Coefficient tuples are compared constant term first.
    """
    for tail in itertools.product(range(p), repeat=r):
        f = list(tail) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise ReduciblePolynomial(f"no irreducible of degree {r} over Z_{p}")  # unreachable


class GF:
    """The field F_{p^r} with a fixed defining polynomial ``irr``.

    Instances are immutable and cached per ``(p, r, irr)``; use
    :func:`construct_field` to build one.
    """

    def __init__(self, p: int, r: int, irr: tuple[int, ...]) -> None:
        self.p = p
        self.r = r
        self.irr = irr
        self.q = p**r
        q = self.q
        self.digits = np.array(
            [[(a // p**i) % p for i in range(r)] for a in range(q)], dtype=np.int64
        ).reshape(q, r)
        self._powers = p ** np.arange(r, dtype=np.int64)

        self.add = self._encode((self.digits[:, None, :] + self.digits[None, :, :]) % p)
        self.sub = self._encode((self.digits[:, None, :] - self.digits[None, :, :]) % p)
        self.neg = self.sub[0].copy()

        # a * x^i for every a and i < r, then bilinear expansion over the digits of b
        shifts = np.zeros((q, r, r), dtype=np.int64)
        cur = self.digits.copy()
        lower = -np.array(irr[:r], dtype=np.int64)
        for i in range(r):
            shifts[:, i, :] = cur
            top = cur[:, r - 1].copy()
            cur = np.concatenate([np.zeros((q, 1), dtype=np.int64), cur[:, : r - 1]], axis=1)
            cur = (cur + top[:, None] * lower[None, :]) % p
        prod = np.einsum("aij,bi->abj", shifts, self.digits) % p
        self.mul = self._encode(prod)

        self.inv = np.full(q, -1, dtype=np.int64)
        nz_a, nz_b = np.nonzero(self.mul == 1)
        self.inv[nz_a] = nz_b
        self.weight = self.digits.sum(axis=1)
        for t in (self.add, self.sub, self.neg, self.mul, self.inv, self.weight):
            t.setflags(write=False)

    def _encode(self, digits: np.ndarray) -> np.ndarray:
        return (digits * self._powers).sum(axis=-1).astype(np.int64)

    # -- element conversion --------------------------------------------------

    def element(self, coeffs: Sequence[int] | int) -> int:
        """Integer code of an element given by its coefficient list."""
        if isinstance(coeffs, (int, np.integer)):
            if not 0 <= int(coeffs) < self.q:
                raise ShapeMismatch(f"element code {coeffs} out of range for q={self.q}")
            return int(coeffs)
        coeffs = list(coeffs)
        if len(coeffs) != self.r or any(not 0 <= int(c) < self.p for c in coeffs):
            raise ShapeMismatch(f"expected {self.r} residues mod {self.p}, got {coeffs}")
        return int(sum(int(c) * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, a: int) -> list[int]:
        return [int(c) for c in self.digits[a]]

    def name(self, a: int) -> str:
        """Human-readable form, e.g. ``a+1`` for the generator plus one."""
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(reversed(terms)) if terms else "0"

    # -- scalar arithmetic ---------------------------------------------------

    def mul_(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.inv[a])

    def power(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = int(self.mul[result, a])
            a = int(self.mul[a, a])
            e >>= 1
        return result

    def base_weight(self, a: int) -> int:
        return int(self.weight[a])

    @property
    def alpha(self) -> int:
        """Class of ``x`` (the polynomial generator); equals 1 when r == 1."""
        return self.element([0, 1] + [0] * (self.r - 2)) if self.r > 1 else 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r}, irr={list(self.irr)})"

    def __reduce__(self):
        return (construct_field, (self.p, self.r, self.irr))


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, r: int, irr: tuple[int, ...]) -> GF:
    return GF(p, r, irr)


def construct_field(p: int, r: int = 1, irr: Sequence[int] | None = None) -> GF:
    """Validate parameters and return the (cached) field ``F_{p^r}``.

    When ``irr`` is omitted the smallest monic irreducible of degree ``r``
    is used; for ``r == 1`` that is ``x`` and the field is ``Z_p``.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if r < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {r}")
    if p**r > MAX_ORDER:
        raise ValueError(f"field order {p}^{r} exceeds table limit {MAX_ORDER}")
    if irr is None:
        poly = smallest_irreducible(p, r)
    else:
        poly = tuple(int(c) for c in irr)
        if len(poly) != r + 1 or poly[-1] % p != 1:
            raise DegreeMismatch(f"irr must be monic of degree {r}, got {list(poly)}")
        if any(not 0 <= c < p for c in poly):
            raise DegreeMismatch(f"irr coefficients must lie in [0, {p - 1}]")
        if not is_irreducible(poly, p):
            raise ReduciblePolynomial(list(poly))
    return _cached_field(p, r, poly)


def field_mul(F: GF, a: int, b: int) -> int:
    return F.mul_(a, b)


def field_inv(F: GF, a: int) -> int:
    return F.inverse(a)


def base_weight(F: GF, a: int) -> int:
    """Sum of the integer lifts of the basis coefficients of ``a``."""
    return F.base_weight(a)
