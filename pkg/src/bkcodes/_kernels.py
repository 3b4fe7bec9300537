"""Hot loops: subset transforms, span enumeration, table-driven weight sums.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical semantics.  The compiled path is used unless the
environment variable ``BKCODES_NO_JIT`` is set to a non-empty value other
than ``0``; it is also skipped automatically when numba cannot be imported.

All arrays hold field elements as integer codes ``0..q-1`` and arithmetic
goes through the precomputed ``add``/``sub``/``mul`` tables of the field.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba as nb
except ImportError:  # pragma: no cover
    nb = None

_flag = os.environ.get("BKCODES_NO_JIT", "")
USE_JIT = nb is not None and _flag in ("", "0")
BACKEND = "numba" if USE_JIT else "numpy"

INDEX_DTYPE = np.int64


# ---------------------------------------------------------------------------
# numpy reference path


def np_zeta(arr: np.ndarray, add: np.ndarray) -> np.ndarray:
    """Subset-sum transform along the last axis (length ``2**k``)."""
    out = np.array(arr, dtype=INDEX_DTYPE, copy=True)
    m = out.shape[-1]
    lead = out.shape[:-1]
    bit = 1
    while bit < m:
        view = out.reshape(lead + (m // (2 * bit), 2, bit))
        view[..., 1, :] = add[view[..., 1, :], view[..., 0, :]]
        bit <<= 1
    return out


def np_moebius(arr: np.ndarray, sub: np.ndarray) -> np.ndarray:
    """Inverse of :func:`np_zeta`."""
    out = np.array(arr, dtype=INDEX_DTYPE, copy=True)
    m = out.shape[-1]
    lead = out.shape[:-1]
    bit = 1
    while bit < m:
        view = out.reshape(lead + (m // (2 * bit), 2, bit))
        view[..., 1, :] = sub[view[..., 1, :], view[..., 0, :]]
        bit <<= 1
    return out


def np_span(basis: np.ndarray, add: np.ndarray, mul: np.ndarray, q: int) -> np.ndarray:
    """All ``q**rows`` F_q-combinations of the rows of ``basis``.

    Word ``w`` uses coefficient digit ``i`` of ``w`` in base ``q`` for row ``i``.
    """
    rows, n = basis.shape
    words = np.zeros((1, n), dtype=INDEX_DTYPE)
    for i in range(rows):
        scaled = mul[np.arange(q)[:, None], basis[i][None, :]]  # (q, n)
        words = add[scaled[:, None, :], words[None, :, :]].reshape(-1, n)
    return words


def np_combine(spans: tuple, q: int) -> np.ndarray:
    """Cartesian product of component words, packed as gray indices.

    ``spans[i]`` has shape ``(s_i, n)``; the result has shape
    ``(prod s_i, n)`` with entry ``sum_i word_i[j] * q**i``.  Component 0
    varies fastest.
    """
    n = spans[0].shape[1]
    acc = np.zeros((1, n), dtype=INDEX_DTYPE)
    scale = 1
    for sp in spans:
        acc = (acc[None, :, :] + sp[:, None, :].astype(INDEX_DTYPE) * scale).reshape(-1, n)
        scale *= q
    return acc


def np_lut_rowsum(idx: np.ndarray, table: np.ndarray) -> np.ndarray:
    """``sum_j table[idx[w, j]]`` for each row ``w``."""
    if idx.shape[0] == 0:
        return np.zeros(0, dtype=INDEX_DTYPE)
    return table[idx].sum(axis=1).astype(INDEX_DTYPE)


# ---------------------------------------------------------------------------
# numba path

if nb is not None:

    @nb.njit(cache=True)
    def nb_zeta(arr, add):  # pragma: no cover - compiled
        out = arr.copy()
        rows, m = out.shape
        for w in range(rows):
            bit = 1
            while bit < m:
                for s in range(m):
                    if s & bit:
                        out[w, s] = add[out[w, s], out[w, s ^ bit]]
                bit <<= 1
        return out

    @nb.njit(cache=True)
    def nb_moebius(arr, sub):  # pragma: no cover - compiled
        out = arr.copy()
        rows, m = out.shape
        for w in range(rows):
            bit = 1
            while bit < m:
                for s in range(m):
                    if s & bit:
                        out[w, s] = sub[out[w, s], out[w, s ^ bit]]
                bit <<= 1
        return out

    @nb.njit(cache=True)
    def nb_span(basis, add, mul, q):  # pragma: no cover - compiled
        rows, n = basis.shape
        total = 1
        for _ in range(rows):
            total *= q
        out = np.zeros((total, n), dtype=np.int64)
        block = 1
        # words with digit i equal to c extend the words on rows < i
        for i in range(rows):
            for c in range(1, q):
                for u in range(block):
                    w = c * block + u
                    for j in range(n):
                        out[w, j] = add[out[u, j], mul[c, basis[i, j]]]
            block *= q
        return out

    @nb.njit(cache=True)
    def nb_combine2(acc, sp, scale):  # pragma: no cover - compiled
        a, n = acc.shape
        s = sp.shape[0]
        out = np.empty((s * a, n), dtype=np.int64)
        for t in range(s):
            for u in range(a):
                for j in range(n):
                    out[t * a + u, j] = acc[u, j] + sp[t, j] * scale
        return out

    @nb.njit(cache=True)
    def nb_lut_rowsum(idx, table):  # pragma: no cover - compiled
        rows, n = idx.shape
        out = np.zeros(rows, dtype=np.int64)
        for w in range(rows):
            acc = 0
            for j in range(n):
                acc += table[idx[w, j]]
            out[w] = acc
        return out

    def nb_combine(spans: tuple, q: int) -> np.ndarray:
        n = spans[0].shape[1]
        acc = np.zeros((1, n), dtype=np.int64)
        scale = 1
        for sp in spans:
            acc = nb_combine2(acc, np.ascontiguousarray(sp, dtype=np.int64), scale)
            scale *= q
        return acc


# ---------------------------------------------------------------------------
# dispatch


def _as2d(arr: np.ndarray) -> tuple[np.ndarray, tuple]:
    arr = np.asarray(arr, dtype=INDEX_DTYPE)
    return np.ascontiguousarray(arr.reshape(-1, arr.shape[-1])), arr.shape


def zeta(arr: np.ndarray, add: np.ndarray) -> np.ndarray:
    if not USE_JIT:
        return np_zeta(arr, add)
    flat, shape = _as2d(arr)
    return nb_zeta(flat, add).reshape(shape)


def moebius(arr: np.ndarray, sub: np.ndarray) -> np.ndarray:
    if not USE_JIT:
        return np_moebius(arr, sub)
    flat, shape = _as2d(arr)
    return nb_moebius(flat, sub).reshape(shape)


def span(basis: np.ndarray, add: np.ndarray, mul: np.ndarray, q: int) -> np.ndarray:
    basis = np.ascontiguousarray(basis, dtype=INDEX_DTYPE)
    if not USE_JIT:
        return np_span(basis, add, mul, q)
    return nb_span(basis, add, mul, q)


def combine(spans: tuple, q: int) -> np.ndarray:
    if not USE_JIT:
        return np_combine(spans, q)
    return nb_combine(spans, q)


def lut_rowsum(idx: np.ndarray, table: np.ndarray) -> np.ndarray:
    idx = np.ascontiguousarray(idx, dtype=INDEX_DTYPE)
    if not USE_JIT:
        return np_lut_rowsum(idx, table)
    return nb_lut_rowsum(idx, np.ascontiguousarray(table, dtype=INDEX_DTYPE))
