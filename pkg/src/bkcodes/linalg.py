"""Row reduction, kernels and spans over F_q (table-driven, exact)."""

from __future__ import annotations

import numpy as np

from . import _kernels as K
from .errors import TooLargeToEnumerate
from .field import GF


def rref(M: np.ndarray, F: GF) -> np.ndarray:
    """Reduced row echelon form with zero rows removed."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2 or A.shape[0] == 0:
        return np.zeros((0, A.shape[-1] if A.ndim == 2 else 0), dtype=np.int64)
    rows, cols = A.shape
    add, mul, inv = F.add, F.mul, F.inv
    neg = F.neg
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c] != 0:
                A[i] = add[A[i], mul[neg[A[i, c]], A[r]]]
        r += 1
    return A[:r]


def pivots(R: np.ndarray) -> list[int]:
    """Pivot columns of a matrix already in reduced row echelon form."""
    return [int(np.nonzero(row)[0][0]) for row in R]


def rank(M: np.ndarray, F: GF) -> int:
    return rref(M, F).shape[0]


def nullspace(M: np.ndarray, F: GF, n: int | None = None) -> np.ndarray:
    """Basis (RREF) of ``{x : M x^T = 0}``, i.e. the Euclidean dual of the row space."""
    R = rref(M, F)
    n = R.shape[1] if n is None else n
    if R.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    piv = pivots(R)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, pc in enumerate(piv):
            out[t, pc] = F.neg[R[i, f]]
    return rref(out, F)


def in_rowspace(vecs: np.ndarray, R: np.ndarray, F: GF) -> bool:
    """True iff every row of ``vecs`` lies in the row space of RREF matrix ``R``."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64))
    if vecs.shape[0] == 0:
        return True
    if R.shape[0] == 0:
        return not vecs.any()
    return rref(np.vstack([R, vecs]), F).shape[0] == R.shape[0]


def same_rowspace(A: np.ndarray, B: np.ndarray, F: GF) -> bool:
    RA, RB = rref(A, F), rref(B, F)
    return RA.shape == RB.shape and bool(np.array_equal(RA, RB))


def span_words(R: np.ndarray, F: GF, cap: int | None = None) -> np.ndarray:
    """All codewords of the row space of ``R`` (rows assumed independent)."""
    size = F.q ** R.shape[0]
    if cap is not None and size > cap:
        raise TooLargeToEnumerate("component size", size, cap)
    return K.span(R, F.add, F.mul, F.q)


def min_weight(R: np.ndarray, F: GF, table: np.ndarray | None = None) -> float:
    """Minimum nonzero weight of the row space; ``table`` maps element -> weight.

    Hamming weight when ``table`` is omitted.  Returns ``inf`` for the zero space.
    """
    if R.shape[0] == 0:
        return float("inf")
    if table is None:
        table = (np.arange(F.q) != 0).astype(np.int64)
    words = span_words(R, F)[1:]
    return int(K.lut_rowsum(words, table).min())
