"""Weights, weight enumerators, character matrices and MacWilliams transforms.

Complete enumerators use one variable per ring element (element-index
order); symmetrized ones use one variable per unit class (representative
order).  The MacWilliams substitution is carried out exactly in the group
ring Z[Z_p] and reduced to Z[ξ] at the end.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from . import linalg
from .codes import ENUM_CAP, Code, as_vector
from .cycint import CycInt, reduce_group_ring
from .errors import KindMismatch, MatrixTooLarge, NonIntegralResult, TooLargeToEnumerate
from .field import GF
from .ring import Ring

#: Default cap on the number of rows of a character matrix.
MATRIX_CAP = 1 << 12
#: Cap on the dense ordered-tuple tensor used by :func:`macwilliams`.
TENSOR_CAP = 1 << 22

COMPLETE, SYMMETRIZED, HAMMING, LEE = "complete", "symmetrized", "hamming", "lee"


def lee_weight(R: Ring, x) -> int:
    """``wtgr``: base weights of all gray coordinates, summed over positions."""
    g = R.zeta(as_vector(R, x))
    return int(R.field.weight[g].sum())


def hamming_weight(R: Ring, x) -> int:
    return int(as_vector(R, x).any(axis=1).sum())


# -- enumerators --------------------------------------------------------------


@dataclass
class WeightEnumerator:
    """Multivariate counting polynomial ``Σ coef · Π X_i^{e_i}``.

    For ``complete``/``symmetrized`` the exponent vector has one entry per
    variable; for ``hamming``/``lee`` it is the single weight ``(w,)``.
    """

    kind: str
    nvars: int
    n: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def serialize(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        strip = lambda t: {e: c for e, c in t.items() if c}
        return (self.kind, self.nvars, self.n) == (other.kind, other.nvars, other.n) and strip(
            self.terms
        ) == strip(other.terms)


def _compositions(idx: np.ndarray, nvars: int, label: np.ndarray | None = None) -> Counter:
    """Count rows by their composition (after optionally relabelling entries)."""
    if label is not None:
        idx = label[idx]
    srt = np.sort(idx, axis=1)
    uniq, counts = np.unique(srt, axis=0, return_counts=True)
    out: Counter = Counter()
    for row, c in zip(uniq, counts):
        e = np.bincount(row, minlength=nvars)
        out[tuple(int(x) for x in e)] += int(c)
    return out


def cwe(C: Code, cap: int = ENUM_CAP) -> WeightEnumerator:
    R = C.ring
    terms: Counter = Counter()
    for block in C.iter_blocks(cap):
        terms.update(_compositions(block, R.size))
    return WeightEnumerator(COMPLETE, R.size, C.n, dict(terms))


def swe(C: Code, cap: int = ENUM_CAP) -> WeightEnumerator:
    uc = unit_classes(C.ring)
    terms: Counter = Counter()
    for block in C.iter_blocks(cap):
        terms.update(_compositions(block, len(uc.reps), uc.class_of))
    return WeightEnumerator(SYMMETRIZED, len(uc.reps), C.n, dict(terms))


def fold_to_swe(W: WeightEnumerator, R: Ring) -> WeightEnumerator:
    """Collapse a complete enumerator along unit classes."""
    if W.kind != COMPLETE:
        raise KindMismatch("fold_to_swe needs a complete enumerator")
    uc = unit_classes(R)
    terms: Counter = Counter()
    for e, c in W.terms.items():
        f = [0] * len(uc.reps)
        for elem, mult in enumerate(e):
            f[uc.class_of[elem]] += mult
        terms[tuple(f)] += c
    return WeightEnumerator(SYMMETRIZED, len(uc.reps), W.n, dict(terms))


def _scalar_enumerator(C: Code, table: np.ndarray, kind: str, cap: int) -> WeightEnumerator:
    counts: Counter = Counter()
    for block in C.iter_blocks(cap):
        w = K.lut_rowsum(block, table)
        vals, cnt = np.unique(w, return_counts=True)
        counts.update({(int(a),): int(b) for a, b in zip(vals, cnt)})
    return WeightEnumerator(kind, 1, C.n, dict(counts))


def hamming_we(C: Code, cap: int = ENUM_CAP) -> WeightEnumerator:
    table = (np.arange(C.ring.size) != 0).astype(np.int64)
    return _scalar_enumerator(C, table, HAMMING, cap)


def lee_we(C: Code, cap: int = ENUM_CAP) -> WeightEnumerator:
    return _scalar_enumerator(C, C.ring.lee_table, LEE, cap)


# -- unit classes -------------------------------------------------------------


@dataclass(frozen=True)
class UnitClasses:
    reps: tuple[int, ...]  # element index of each class representative
    class_of: np.ndarray  # element index -> class number
    sizes: tuple[int, ...]


def unit_classes(R: Ring) -> UnitClasses:
    """Orbits of B_k under multiplication by units.

    Two elements share an orbit iff their gray vectors vanish on the same
    coordinates.  Representatives are the smallest element index per orbit.
    """
    gray = R.unpack(R.gray_index_of_element)
    pattern = (gray != 0).astype(np.int64) @ (1 << np.arange(R.m, dtype=np.int64))
    reps: dict[int, int] = {}
    for elem, pat in enumerate(pattern):
        reps.setdefault(int(pat), elem)
    ordered = sorted(reps.values())
    number = {int(pattern[e]): i for i, e in enumerate(ordered)}
    class_of = np.array([number[int(p)] for p in pattern], dtype=np.int64)
    sizes = tuple(int(x) for x in np.bincount(class_of, minlength=len(ordered)))
    return UnitClasses(tuple(ordered), class_of, sizes)


# -- character matrices -------------------------------------------------------


@dataclass(frozen=True)
class CharMatrix:
    """Matrix of elements of Z[ξ] stored as group-ring counts ``(rows, cols, p)``."""

    kind: str
    p: int
    counts: np.ndarray

    def entry(self, a: int, b: int) -> CycInt:
        return CycInt(self.p, self.counts[a, b])

    @property
    def shape(self) -> tuple[int, int]:
        return self.counts.shape[:2]


def _exponents(R: Ring, hermitian: bool = False) -> np.ndarray:
    idx = np.arange(R.size)
    cols = R.conj_table[idx] if hermitian else idx
    prod = R.mul_indices(idx[:, None], cols[None, :])
    return R.lee_table[prod] % R.field.p


def char_matrix(R: Ring, kind: str = "T", cap: int = MATRIX_CAP) -> CharMatrix:
    """``T``, ``T_H`` or ``S`` for the generating character ``ξ^{wtgr}``."""
    if R.size > cap:
        raise MatrixTooLarge("|B_k|", R.size, cap)
    p = R.field.p
    if kind in ("T", "T_H"):
        E = _exponents(R, hermitian=kind == "T_H")
        counts = np.zeros(E.shape + (p,), dtype=np.int64)
        np.put_along_axis(counts, E[..., None], 1, axis=-1)
        return CharMatrix(kind, p, counts)
    if kind == "S":
        full = full_S(R)
        uc = unit_classes(R)
        return CharMatrix("S", p, full[list(uc.reps)])
    raise KindMismatch(f"unknown character matrix {kind!r}")


def full_S(R: Ring) -> np.ndarray:
    """``S`` with one row per ring element (rows of equivalent elements coincide)."""
    T = char_matrix(R, "T").counts
    uc = unit_classes(R)
    t = len(uc.reps)
    out = np.zeros((R.size, t, T.shape[2]), dtype=np.int64)
    for col in range(t):
        out[:, col] = T[:, uc.class_of == col].sum(axis=1)
    return out


# -- MacWilliams ----------------------------------------------------------------


def macwilliams(W: WeightEnumerator, M: CharMatrix, size: int) -> WeightEnumerator:
    """``(1/size) · W(M · X)``, expanded exactly.

    The enumerator is laid out as a dense tensor over ordered tuples (each
    monomial placed at its sorted tuple), every axis is contracted with
    ``M``, and the ordered tuples are folded back into compositions.
    """
    expected = {"T": COMPLETE, "T_H": COMPLETE, "S": SYMMETRIZED}
    if expected.get(M.kind) != W.kind:
        raise KindMismatch(f"{W.kind} enumerator cannot be transformed by {M.kind}")
    N, cols = M.shape
    if N != W.nvars:
        raise KindMismatch(f"matrix has {N} rows, enumerator has {W.nvars} variables")
    n, p = W.n, M.p
    if N**n > TENSOR_CAP or cols**n > TENSOR_CAP:
        raise TooLargeToEnumerate("tensor entries", max(N, cols) ** n, TENSOR_CAP)

    tensor = np.zeros((N,) * n + (p,), dtype=np.int64)
    for e, c in W.terms.items():
        pos = tuple(i for i, mult in enumerate(e) for _ in range(mult))
        tensor[pos + (0,)] += c
    for axis in range(n):
        out = None
        for shift in range(p):
            if not M.counts[..., shift].any():
                continue
            rolled = np.roll(tensor, shift, axis=-1)
            part = np.tensordot(rolled, M.counts[..., shift], axes=([axis], [0]))
            part = np.moveaxis(part, -1, axis)
            out = part if out is None else out + part
        tensor = out if out is not None else np.zeros(tensor.shape[:axis] + (cols,) + tensor.shape[axis + 1 :], dtype=np.int64)

    # fold ordered tuples into compositions before testing rationality: a
    # single ordering may carry an irrational part that its permutations cancel
    reduced = reduce_group_ring(tensor)
    flat = reduced.reshape(-1, p - 1)
    live = np.flatnonzero(flat.any(axis=1))
    terms: Counter = Counter()
    if live.size:
        pos = np.stack(np.unravel_index(live, (cols,) * n), axis=1)
        uniq, inv = np.unique(np.sort(pos, axis=1), axis=0, return_inverse=True)
        sums = np.zeros((len(uniq), p - 1), dtype=np.int64)
        np.add.at(sums, inv.reshape(-1), flat[live])
        if sums[:, 1:].any():
            raise NonIntegralResult("irrational coefficient after substitution")
        for row, s in zip(uniq, sums[:, 0]):
            if s == 0:
                continue
            if s % size:
                raise NonIntegralResult(f"coefficient {s} not divisible by {size}")
            if s < 0:
                raise NonIntegralResult(f"negative coefficient {s // size}")
            terms[tuple(int(x) for x in np.bincount(row, minlength=cols))] += int(s // size)
    return WeightEnumerator(W.kind, cols, n, dict(terms))


# -- codes over the field --------------------------------------------------------


def field_weight_distribution(G: np.ndarray, F: GF, n: int | None = None) -> list[int]:
    """Hamming weight distribution ``A_0..A_n`` of the row space of ``G``."""
    R = linalg.rref(G, F) if G.shape[0] else G
    n = G.shape[1] if n is None else n
    if R.shape[0] == 0:
        return [1] + [0] * n
    words = linalg.span_words(R, F)
    w = K.lut_rowsum(words, (np.arange(F.q) != 0).astype(np.int64))
    return [int(x) for x in np.bincount(w, minlength=n + 1)]


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s) for s in range(j + 1)
    )


def hamming_macwilliams(dist: Sequence[int], q: int) -> list[int]:
    """Weight distribution of the dual of an F_q-linear code with distribution ``dist``."""
    n = len(dist) - 1
    size = sum(dist)
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(j, i, n, q) for i, a in enumerate(dist))
        if s % size:
            raise NonIntegralResult(f"dual count {s}/{size} not integral")
        out.append(s // size)
    return out


def is_formally_self_dual(G: np.ndarray, F: GF, n: int) -> bool:
    dist = field_weight_distribution(G, F, n)
    return sum(dist) ** 2 == F.q**n and hamming_macwilliams(dist, F.q) == dist
