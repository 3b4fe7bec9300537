"""The ring B_k = F_q[v_1..v_k] / (v_i^2 = v_i, v_i v_j = v_j v_i).

Elements are coefficient vectors over the monomials ``v_S``; subsets
``S`` of ``{1..k}`` are enumerated by bitmask (bit ``j-1`` set iff
``j in S``), so index 0 is the empty set and index ``2^k - 1`` is all of
``{1..k}``.  The gray vector of an element is its subset-sum (zeta)
transform, i.e. its evaluations at the ``2^k`` points of ``{0,1}^k``; this
is the CRT decomposition and every product is computed there.

Element order: an element's index is ``sum_i coeffs[i] * q**i`` with
``coeffs[i]`` the integer code of the coefficient of ``v_{S_i}``.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels as K
from .errors import EmptyGeneratorList, LevelOutOfRange, ShapeMismatch
from .field import GF, construct_field

#: Largest ring size for which per-element lookup tables are built.
TABLE_CAP = 1 << 16


class Ring:
    """Parameters of B_k over a fixed field."""

    def __init__(self, field: GF, k: int) -> None:
        if k < 0:
            raise LevelOutOfRange(f"k must be >= 0, got {k}")
        self.field = field
        self.k = k
        self.m = 1 << k
        self.full = self.m - 1
        self.q = field.q
        self.size = self.q**self.m
        self._powers = self.q ** np.arange(self.m, dtype=np.int64)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def of(cls, p: int, r: int = 1, k: int = 1, irr: Sequence[int] | None = None) -> "Ring":
        return _ring(construct_field(p, r, irr), k)

    def element(self, coeffs: Sequence[int] | np.ndarray) -> "RingElement":
        c = tuple(int(x) for x in np.asarray(coeffs).reshape(-1))
        if len(c) != self.m or any(not 0 <= x < self.q for x in c):
            raise ShapeMismatch(f"expected {self.m} field codes in [0,{self.q}), got {c}")
        return RingElement(self, c)

    def from_wire(self, enc: Sequence[Sequence[int]]) -> "RingElement":
        """Element from its wire form: ``2^k`` field elements, each ``r`` residues."""
        if len(enc) != self.m:
            raise ShapeMismatch(f"ring element needs {self.m} field elements, got {len(enc)}")
        return self.element([self.field.element(c) for c in enc])

    def scalar(self, a: int) -> "RingElement":
        c = [0] * self.m
        c[0] = a
        return self.element(c)

    def monomial(self, mask: int, coeff: int = 1) -> "RingElement":
        """``coeff * v_S`` for the subset with bitmask ``mask``."""
        c = [0] * self.m
        c[mask] = coeff
        return self.element(c)

    def v(self, i: int) -> "RingElement":
        """The generator ``v_i`` (1-based)."""
        if not 1 <= i <= self.k:
            raise LevelOutOfRange(f"v_{i} does not exist in B_{self.k}")
        return self.monomial(1 << (i - 1))

    def idempotent(self, mask: int) -> "RingElement":
        """The primitive idempotent whose gray vector is the indicator of ``mask``."""
        g = [0] * self.m
        g[mask] = 1
        return self.from_gray(g)

    @property
    def zero(self) -> "RingElement":
        return self.element([0] * self.m)

    @property
    def one(self) -> "RingElement":
        return self.scalar(1)

    def from_gray(self, g: Sequence[int] | np.ndarray) -> "RingElement":
        g = np.asarray(g, dtype=np.int64)
        if g.shape != (self.m,):
            raise ShapeMismatch(f"gray vector must have {self.m} entries, got shape {g.shape}")
        return self.element(self.moebius(g))

    def from_index(self, idx: int) -> "RingElement":
        return self.element(self.index_to_coeffs(np.asarray(idx)))

    def elements(self) -> Iterable["RingElement"]:
        for i in range(self.size):
            yield self.from_index(i)

    # -- batch transforms (last axis has length 2^k) ---------------------------

    def zeta(self, coeffs: np.ndarray) -> np.ndarray:
        return K.zeta(coeffs, self.field.add)

    def moebius(self, gray: np.ndarray) -> np.ndarray:
        return K.moebius(gray, self.field.sub)

    def pack(self, vec: np.ndarray) -> np.ndarray:
        """Integer index of length-``2^k`` vectors (coefficient or gray form)."""
        return (np.asarray(vec, dtype=np.int64) * self._powers).sum(axis=-1)

    def unpack(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._powers) % self.q

    index_to_coeffs = unpack

    @functools.cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self.size > TABLE_CAP:
            raise ValueError(f"|B_k| = {self.size} exceeds table cap {TABLE_CAP}")
        coeffs = self.unpack(np.arange(self.size))
        gray = self.zeta(coeffs)
        gray_idx = self.pack(gray)
        elem_of_gray = np.empty(self.size, dtype=np.int64)
        elem_of_gray[gray_idx] = np.arange(self.size)
        return gray_idx, elem_of_gray

    @property
    def gray_index_of_element(self) -> np.ndarray:
        return self._tables[0]

    @property
    def element_of_gray_index(self) -> np.ndarray:
        return self._tables[1]

    @functools.cached_property
    def lee_table(self) -> np.ndarray:
        """``wtgr`` of every element, indexed by element index."""
        gray = self.unpack(self.gray_index_of_element)
        return self.field.weight[gray].sum(axis=-1)

    @functools.cached_property
    def conj_table(self) -> np.ndarray:
        """Element index of the conjugate, indexed by element index."""
        gray = self.unpack(self.gray_index_of_element)
        flipped = gray[:, ::-1]  # mask -> full ^ mask reverses the bitmask order
        return self.element_of_gray_index[self.pack(flipped)]

    def mul_indices(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product of ring elements given by index (broadcasting)."""
        ga = self.unpack(self.gray_index_of_element[a])
        gb = self.unpack(self.gray_index_of_element[b])
        return self.element_of_gray_index[self.pack(self.field.mul[ga, gb])]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.field is other.field and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.r, self.field.irr, self.k))

    def __repr__(self) -> str:
        return f"Ring(B_{self.k} over {self.field!r})"


@functools.lru_cache(maxsize=None)
def _ring(field: GF, k: int) -> Ring:
    return Ring(field, k)


def make_ring(field: GF, k: int) -> Ring:
    return _ring(field, k)


@dataclass(frozen=True)
class RingElement:
    """An element of B_k; equality is on the coefficient vector."""

    ring: Ring = dc_field(compare=False, repr=False)
    coeffs: tuple[int, ...]

    @functools.cached_property
    def gray(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.ring.zeta(np.array(self.coeffs)))

    @property
    def index(self) -> int:
        return int(self.ring.pack(np.array(self.coeffs)))

    def __add__(self, other: "RingElement") -> "RingElement":
        add = self.ring.field.add
        return RingElement(self.ring, tuple(int(add[a, b]) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        sub = self.ring.field.sub
        return RingElement(self.ring, tuple(int(sub[a, b]) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        return self.ring.zero - self

    def __mul__(self, other: "RingElement | int") -> "RingElement":
        if isinstance(other, (int, np.integer)):
            mul = self.ring.field.mul
            return RingElement(self.ring, tuple(int(mul[other, a]) for a in self.coeffs))
        return ring_mul(self.ring, self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RingElement":
        F = self.ring.field
        return self.ring.from_gray([F.power(g, e) for g in self.gray])

    def conjugate(self) -> "RingElement":
        return conjugate(self.ring, self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def wire(self) -> list[list[int]]:
        return [self.ring.field.coeffs(c) for c in self.coeffs]

    def __str__(self) -> str:
        F = self.ring.field
        terms = []
        for mask, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "".join(f"v{j + 1}" if self.ring.k > 1 else "v" for j in range(self.ring.k) if mask >> j & 1)
            coef = F.name(c)
            if not mono:
                terms.append(coef)
            elif coef == "1":
                terms.append(mono)
            else:
                terms.append(f"({coef}){mono}" if "+" in coef else f"{coef}{mono}")
        return " + ".join(terms) if terms else "0"


# -- Gray maps -----------------------------------------------------------------


def gray_phi(R: Ring, a: RingElement) -> tuple[int, ...]:
    """φ: subset sums of the coefficients, in bitmask order."""
    return a.gray


def gray_phi_inv(R: Ring, g: Sequence[int]) -> RingElement:
    return R.from_gray(g)


def _phi_step(coeffs: Sequence[int], add: np.ndarray) -> tuple[list[int], list[int]]:
    """One tower step ``α + β v_j -> (α, α + β)`` on a coefficient vector of B_j."""
    half = len(coeffs) // 2
    lo = list(coeffs[:half])
    hi = list(coeffs[half:])
    return lo, [int(add[a, b]) for a, b in zip(lo, hi)]


def gray_Phi(R: Ring, a: RingElement) -> tuple[int, ...]:
    """Φ_k = φ_1∘…∘φ_k by explicit tower splitting on the top variable.

    Each step emits ``Φ(α) || Φ(α + β)``, so position ``t`` of the output
    holds the evaluation with ``v_j`` equal to bit ``j-1`` of ``t``.
    """
    add = R.field.add

    def rec(c: list[int]) -> list[int]:
        if len(c) == 1:
            return c
        lo, hi = _phi_step(c, add)
        return rec(lo) + rec(hi)

    return tuple(rec(list(a.coeffs)))


def pi_project(Rj: Ring, a: RingElement, k: int) -> list[RingElement]:
    """Π_{j,k}: stop the tower at level ``k``, giving ``2^(j-k)`` elements of B_k."""
    j = Rj.k
    if not 0 <= k < j:
        raise LevelOutOfRange(f"need 0 <= k < j, got k={k}, j={j}")
    Rk = make_ring(Rj.field, k)

    def rec(c: list[int]) -> list[list[int]]:
        if len(c) == Rk.m:
            return [c]
        lo, hi = _phi_step(c, Rj.field.add)
        return rec(lo) + rec(hi)

    return [Rk.element(c) for c in rec(list(a.coeffs))]


# -- products, conjugation, units --------------------------------------------


def ring_mul(R: Ring, a: RingElement, b: RingElement) -> RingElement:
    """Product through the CRT coordinates."""
    g = R.field.mul[np.array(a.gray), np.array(b.gray)]
    return R.from_gray(g)


def conjugate(R: Ring, a: RingElement) -> RingElement:
    """The automorphism fixing F_q with ``v_i -> 1 - v_i`` for every ``i``."""
    g = a.gray
    return R.from_gray([g[i ^ R.full] for i in range(R.m)])


def is_unit(R: Ring, a: RingElement) -> bool:
    return all(g != 0 for g in a.gray)


def unit_count(R: Ring) -> int:
    return (R.q - 1) ** R.m


def gamma_coeff(alpha_S: int) -> int:
    return -1 if alpha_S != 0 else 0


# -- ideals -----------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple[RingElement, ...]

    @classmethod
    def of(cls, R: Ring, *gens: RingElement) -> "Ideal":
        return cls(R, tuple(gens))

    @property
    def support(self) -> frozenset[int]:
        """Gray coordinates on which the ideal is the whole field."""
        return frozenset(i for g in self.generators for i, x in enumerate(g.gray) if x)

    def cardinality(self) -> int:
        return self.ring.q ** len(self.support)

    def contains(self, a: RingElement) -> bool:
        sup = self.support
        return all(x == 0 or i in sup for i, x in enumerate(a.gray))

    def elements(self) -> set[int]:
        """Element indices of the ideal, via the CRT description."""
        R = self.ring
        sup = sorted(self.support)
        out = set()
        for vals in itertools.product(range(R.q), repeat=len(sup)):
            g = [0] * R.m
            for i, x in zip(sup, vals):
                g[i] = x
            out.add(R.from_gray(g).index)
        return out

    def same_as(self, other: "Ideal") -> bool:
        return self.support == other.support


def ideal_collapse(I: Ideal) -> RingElement:
    """Single generator ``Σ_{A≠∅} (-1)^{|A|+1} (Π_{j∈A} α_j)^{q-1}``."""
    gens = I.generators
    if not gens:
        raise EmptyGeneratorList("ideal has no generators")
    R = I.ring
    e = R.q - 1
    total = R.zero
    for size in range(1, len(gens) + 1):
        for A in itertools.combinations(gens, size):
            prod = R.one
            for x in A:
                prod = prod * x
            term = prod**e
            total = total + term if size % 2 == 1 else total - term
    return total


def maximal_ideals(R: Ring) -> list[Ideal]:
    """The ``2^k`` maximal ideals; entry ``i`` is the kernel of gray coordinate ``i``.

    Evaluation at the point with bitmask ``i`` kills ``v_j`` when bit ``j`` is
    clear and ``1 - v_j`` when it is set.
    """
    out = []
    for i in range(R.m):
        gens = []
        for j in range(R.k):
            vj = R.v(j + 1)
            gens.append(R.one - vj if i >> j & 1 else vj)
        out.append(Ideal(R, tuple(gens)))
    return out


def dual_formula_generator(R: Ring, a: RingElement) -> RingElement:
    """The closed-form generator ``Π_{S: α_S≠0} (1 + γ(α_S v_S) v_S)``.

    Expanded, this is ``Σ_A (Π_{S∈A} γ_S) v_{∪A}`` over families ``A`` of
    subsets with nonzero coefficient, the unions accumulated in bitmask order.
    """
    F = R.field
    coeffs = [0] * R.m
    support = [S for S, c in enumerate(a.coeffs) if c != 0]
    for size in range(len(support) + 1):
        for fam in itertools.combinations(support, size):
            sign = 1
            union = 0
            for S in fam:
                sign *= gamma_coeff(a.coeffs[S])
                union |= S
            term = 1 if sign == 1 else int(F.neg[1])
            coeffs[union] = int(F.add[coeffs[union], term])
    return R.element(coeffs)


def ideal_dual(I: Ideal, mode: str = "euclidean", method: str = "formula") -> Ideal:
    """Dual ideal of a principal ideal.

    ``method="formula"`` evaluates the closed-form γ-expression on the
    (collapsed) generator.  ``method="crt"`` returns the true annihilator,
    computed from the gray support.  The two differ whenever the generator
    is not built from monomials alone.
    """
    if not I.generators:
        raise EmptyGeneratorList("ideal has no generators")
    R = I.ring
    gen = I.generators[0] if len(I.generators) == 1 else ideal_collapse(I)
    if method == "formula":
        d = dual_formula_generator(R, gen)
    elif method == "crt":
        d = R.from_gray([0 if x else 1 for x in gen.gray])
    else:
        raise ValueError(f"unknown method {method!r}")
    if mode == "hermitian":
        d = conjugate(R, d)
    elif mode != "euclidean":
        raise ValueError(f"unknown mode {mode!r}")
    return Ideal(R, (d,))


def theta_decompose(R: Ring, a: RingElement) -> tuple[int, ...]:
    """Residues modulo the maximal ideals, in the order of :func:`maximal_ideals`."""
    return a.gray


def theta_combine(R: Ring, residues: Sequence[int]) -> RingElement:
    if len(residues) != R.m:
        raise ShapeMismatch(f"need {R.m} residues, got {len(residues)}")
    return R.from_gray(list(residues))


def vector_gray(R: Ring, vec: np.ndarray) -> np.ndarray:
    """Gray form of an ``(..., n, 2^k)`` coefficient array."""
    return R.zeta(vec)
