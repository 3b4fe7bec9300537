"""Linear codes over B_k^n, stored through their CRT components.

A code is determined by ``2^k`` subspaces of F_q^n: component ``i`` is the
image of the code under gray coordinate ``i`` applied to every position.
Size, rank, duals and distances are all computed on the components.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from . import linalg
from .errors import LengthMismatch, ShapeMismatch, TooLargeToEnumerate
from .field import GF
from .ring import Ring, RingElement, make_ring

#: Default cap on the number of codewords materialised at once.
ENUM_CAP = 1 << 24

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


def as_vector(R: Ring, vec) -> np.ndarray:
    """Coerce a vector of ring elements to an ``(n, 2^k)`` coefficient array."""
    if isinstance(vec, np.ndarray):
        arr = np.asarray(vec, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != R.m:
            raise ShapeMismatch(f"vector array must have shape (n, {R.m}), got {arr.shape}")
        return arr
    rows = []
    for x in vec:
        if isinstance(x, RingElement):
            rows.append(x.coeffs)
        else:
            rows.append(R.element(x).coeffs)
    return np.array(rows, dtype=np.int64).reshape(len(rows), R.m)


class Code:
    """A linear code over B_k of length ``n`` (immutable)."""

    def __init__(self, ring: Ring, n: int, generators: np.ndarray, components: Sequence[np.ndarray]):
        self.ring = ring
        self.n = n
        self.generators = generators
        self.components = tuple(components)
        for c in self.components:
            c.setflags(write=False)
        generators.setflags(write=False)

    # -- basic data -----------------------------------------------------------

    @property
    def field(self) -> GF:
        return self.ring.field

    @property
    def component_ranks(self) -> tuple[int, ...]:
        return tuple(int(c.shape[0]) for c in self.components)

    @property
    def dimension(self) -> int:
        """``log_q |C|``."""
        return sum(self.component_ranks)

    @property
    def cardinality(self) -> int:
        return self.field.q ** self.dimension

    def key(self) -> tuple:
        return (self.ring, self.n) + tuple(c.tobytes() + bytes([c.shape[0]]) for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.n == other.n
            and all(np.array_equal(a, b) for a, b in zip(self.components, other.components))
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Code(n={self.n}, |C|={self.cardinality}, ranks={self.component_ranks}, {self.ring!r})"

    # -- membership and enumeration ------------------------------------------

    def contains(self, vec) -> bool:
        g = self.ring.zeta(as_vector(self.ring, vec))
        return all(linalg.in_rowspace(g[:, i], self.components[i], self.field) for i in range(self.ring.m))

    def iter_blocks(self, cap: int = ENUM_CAP) -> Iterator[np.ndarray]:
        """Codewords as ``(block, n)`` arrays of element indices.

        Blocks follow the frozen order: component ``2^k - 1`` varies slowest.
        """
        if self.cardinality > cap:
            raise TooLargeToEnumerate("|C|", self.cardinality, cap)
        F = self.field
        spans = [linalg.span_words(c, F) for c in self.components]
        if not spans:
            return
        elem_of_gray = self.ring.element_of_gray_index
        last = spans[-1]
        head = K.combine(tuple(spans[:-1]), F.q) if len(spans) > 1 else np.zeros((1, self.n), dtype=np.int64)
        scale = F.q ** (self.ring.m - 1)
        step = max(1, (1 << 20) // max(1, head.shape[0]))
        for lo in range(0, last.shape[0], step):
            chunk = last[lo : lo + step]
            gray_idx = (head[None, :, :] + chunk[:, None, :] * scale).reshape(-1, self.n)
            yield elem_of_gray[gray_idx]

    def codewords(self, cap: int = ENUM_CAP) -> np.ndarray:
        """All codewords as an ``(|C|, n)`` array of element indices."""
        blocks = list(self.iter_blocks(cap))
        return np.concatenate(blocks) if blocks else np.zeros((0, self.n), dtype=np.int64)


# -- construction --------------------------------------------------------------


def _components_from_gray(R: Ring, gray: np.ndarray) -> list[np.ndarray]:
    n = gray.shape[1]
    return [linalg.rref(gray[:, :, i].reshape(-1, n), R.field) for i in range(R.m)]


def code_new(R: Ring, n: int, generators: Sequence = ()) -> Code:
    """Code generated (as a B_k-module) by ``generators``."""
    if n < 1:
        raise LengthMismatch("code length must be >= 1")
    gens = [as_vector(R, g) for g in generators]
    for g in gens:
        if g.shape[0] != n:
            raise LengthMismatch(f"generator of length {g.shape[0]} in a code of length {n}")
    G = np.array(gens, dtype=np.int64).reshape(len(gens), n, R.m)
    comps = _components_from_gray(R, R.zeta(G)) if gens else [np.zeros((0, n), dtype=np.int64)] * R.m
    return Code(R, n, G, comps)


def crt_combine(R: Ring, n: int, components: Sequence[np.ndarray]) -> Code:
    """``crt(C_1, ..., C_{2^k})`` from generator matrices of the components."""
    if len(components) != R.m:
        raise ShapeMismatch(f"need {R.m} components, got {len(components)}")
    comps = []
    for c in components:
        c = np.asarray(c, dtype=np.int64).reshape(-1, n) if np.size(c) else np.zeros((0, n), dtype=np.int64)
        if c.shape[1] != n:
            raise ShapeMismatch(f"component of length {c.shape[1]}, expected {n}")
        comps.append(linalg.rref(c, R.field))
    gens = []
    for i, c in enumerate(comps):
        for row in c:
            gray = np.zeros((n, R.m), dtype=np.int64)
            gray[:, i] = row
            gens.append(R.moebius(gray))
    G = np.array(gens, dtype=np.int64).reshape(len(gens), n, R.m)
    return Code(R, n, G, comps)


def code_components(C: Code) -> tuple[np.ndarray, ...]:
    return C.components


def zero_code(R: Ring, n: int) -> Code:
    return code_new(R, n, [])


def full_code(R: Ring, n: int) -> Code:
    return crt_combine(R, n, [np.eye(n, dtype=np.int64)] * R.m)


def code_enumerate(C: Code, cap: int = ENUM_CAP) -> set[tuple[int, ...]]:
    """Codeword set as tuples of element indices."""
    return {tuple(int(x) for x in w) for w in C.codewords(cap)}


# -- duality -----------------------------------------------------------------


def dual(C: Code, mode: str = EUCLIDEAN) -> Code:
    """Euclidean or Hermitian dual, componentwise."""
    F = C.field
    perp = [linalg.nullspace(c, F, C.n) for c in C.components]
    if mode == HERMITIAN:
        perp = [perp[i ^ C.ring.full] for i in range(C.ring.m)]
    elif mode != EUCLIDEAN:
        raise ValueError(f"unknown dual mode {mode!r}")
    return crt_combine(C.ring, C.n, perp)


def inner_product(R: Ring, u: np.ndarray, w: np.ndarray, mode: str = EUCLIDEAN) -> RingElement:
    """``[u, w]`` or ``[u, w]_H`` for coefficient arrays of shape ``(n, 2^k)``."""
    F = R.field
    gu, gw = R.zeta(u), R.zeta(w)
    if mode == HERMITIAN:
        gw = gw[:, ::-1]
    prods = F.mul[gu, gw]
    acc = np.zeros(R.m, dtype=np.int64)
    for row in prods:
        acc = F.add[acc, row]
    return R.from_gray(acc)


@dataclass(frozen=True)
class SelfDualStatus:
    euclid_orthogonal: bool
    euclid_dual: bool
    hermitian_orthogonal: bool
    hermitian_dual: bool
    type_II: bool | None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def is_subcode(A: Code, B: Code) -> bool:
    F = A.field
    return all(linalg.in_rowspace(a, b, F) for a, b in zip(A.components, B.components))


def self_dual_status(C: Code, with_type_II: bool = True, cap: int = ENUM_CAP) -> SelfDualStatus:
    de, dh = dual(C, EUCLIDEAN), dual(C, HERMITIAN)
    euclid = C == de
    type_II = None
    if with_type_II:
        if not euclid:
            type_II = False
        else:
            table = C.ring.lee_table
            type_II = all(bool((K.lut_rowsum(b, table) % 4 == 0).all()) for b in C.iter_blocks(cap))
    return SelfDualStatus(
        euclid_orthogonal=is_subcode(C, de),
        euclid_dual=euclid,
        hermitian_orthogonal=is_subcode(C, dh),
        hermitian_dual=C == dh,
        type_II=type_II,
    )


# -- independence and generating sets -----------------------------------------


def _component_images(R: Ring, vectors: Sequence) -> np.ndarray:
    vecs = [as_vector(R, v) for v in vectors]
    if not vecs:
        return np.zeros((0, 0, R.m), dtype=np.int64)
    return R.zeta(np.array(vecs, dtype=np.int64))


def check_independence(R: Ring, vectors: Sequence, mode: str = "plain", cap: int = 1 << 16) -> bool:
    """Independence (``mode="plain"``) or modular independence (``"modular"``).

    Plain independence is checked exhaustively over all scalar tuples in
    B_k^s when ``|B_k|^s <= cap``; above that the equivalent CRT criterion
    is used (in every component, the nonzero images are linearly
    independent over F_q).
    """
    F = R.field
    imgs = _component_images(R, vectors)
    s = imgs.shape[0]
    if mode == "modular":
        if s == 0:
            return True
        return any(linalg.rank(imgs[:, :, i], F) == s for i in range(R.m))
    if mode != "plain":
        raise ValueError(f"unknown independence mode {mode!r}")
    if s == 0:
        return True
    if R.size**s <= cap:
        return _plain_independence_exhaustive(R, np.array([as_vector(R, v) for v in vectors]))
    for i in range(R.m):
        nz = [imgs[j, :, i] for j in range(s) if imgs[j, :, i].any()]
        if nz and linalg.rank(np.array(nz), F) != len(nz):
            return False
    return True


def _plain_independence_exhaustive(R: Ring, vecs: np.ndarray) -> bool:
    s, n, _ = vecs.shape
    idx = R.pack(vecs)  # (s, n) element indices
    scal = np.arange(R.size)
    # products[j][a, t] = (scalar a) * vecs[j][t]
    products = [R.mul_indices(scal[:, None], idx[j][None, :]) for j in range(s)]
    gray_of = R.unpack(R.gray_index_of_element)  # (N, m)
    add = R.field.add
    for combo in itertools.product(range(R.size), repeat=s):
        total = np.zeros((n, R.m), dtype=np.int64)
        for j, a in enumerate(combo):
            total = add[total, gray_of[products[j][a]]]
        if total.any():
            continue
        if any(products[j][a].any() for j, a in enumerate(combo)):
            return False
    return True


def ideal_size_of_vector(R: Ring, vec) -> int:
    """``I(u)``: size of the ideal generated by the coordinates of ``u``."""
    g = R.zeta(as_vector(R, vec))
    return R.q ** int(g.any(axis=0).sum())


def minimal_generating_set(C: Code) -> list[np.ndarray]:
    """Independent, modular-independent generating set of ``C``.

    Vector ``j`` is the CRT lift of the ``j``-th basis row of every
    component that has one.  Its size is the rank of ``C`` and the product
    of the ideal sizes ``I(u_j)`` equals ``|C|``.
    """
    R = C.ring
    t = max(C.component_ranks, default=0)
    out = []
    for j in range(t):
        gray = np.zeros((C.n, R.m), dtype=np.int64)
        for i, comp in enumerate(C.components):
            if j < comp.shape[0]:
                gray[:, i] = comp[j]
        out.append(R.moebius(gray))
    assert math.prod(ideal_size_of_vector(R, u) for u in out) == C.cardinality
    return out


@dataclass(frozen=True)
class RankProfile:
    rank: int
    free_rank: int
    component_ranks: tuple[int, ...]
    is_free: bool


def rank_profile(C: Code) -> RankProfile:
    ranks = C.component_ranks
    return RankProfile(max(ranks), min(ranks), ranks, len(set(ranks)) == 1)


# -- Gray images and tower maps -----------------------------------------------


def gray_image(C: Code, map: str = "phi") -> np.ndarray:
    """Generator matrix (RREF) over F_q of the Gray image, length ``2^k n``.

    Built from the images of ``v_S * g`` for every generator ``g`` and subset
    ``S``; those span the image because the ``v_S`` span B_k over F_q.
    """
    from .ring import gray_Phi

    R, F = C.ring, C.field
    rows = []
    for g in C.generators:
        for S in range(R.m):
            vS = R.monomial(S)
            word = []
            for x in g:
                y = vS * R.element(x)
                word.extend(y.gray if map == "phi" else gray_Phi(R, y))
            rows.append(word)
    if map not in ("phi", "Phi"):
        raise ValueError(f"unknown gray map {map!r}")
    if not rows:
        return np.zeros((0, R.m * C.n), dtype=np.int64)
    return linalg.rref(np.array(rows, dtype=np.int64), F)


def project_code(C: Code, k: int) -> Code:
    """``Π_{j,k}(C)``: image over B_k, length ``2^(j-k) n``, coordinates grouped per position."""
    from .ring import pi_project

    R = C.ring
    Rk = make_ring(R.field, k)
    gens = []
    high = range(0, R.m, Rk.m)  # masks supported on v_{k+1..j}
    for g in C.generators:
        for S in high:
            vS = R.monomial(S)
            vec = []
            for x in g:
                vec.extend(y.coeffs for y in pi_project(R, vS * R.element(x), k))
            gens.append(vec)
    return code_new(Rk, C.n * (R.m // Rk.m), gens)


def extend_code(C: Code, j: int) -> Code:
    """Code over B_j (``j >= k``) generated by the same vectors."""
    R = C.ring
    Rj = make_ring(R.field, j)
    G = np.zeros((C.generators.shape[0], C.n, Rj.m), dtype=np.int64)
    G[:, :, : R.m] = C.generators
    return code_new(Rj, C.n, list(G))


def random_code(R: Ring, n: int, rng: np.random.Generator, max_gens: int = 3) -> Code:
    s = int(rng.integers(0, max_gens + 1))
    G = rng.integers(0, R.q, size=(s, n, R.m))
    # sprinkle zero entries so that non-free codes are common
    G[rng.random(G.shape) < 0.3] = 0
    return code_new(R, n, list(G))
