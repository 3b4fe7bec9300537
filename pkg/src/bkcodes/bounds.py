"""Minimum distances, Singleton-type bounds and their classification."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as K
from . import linalg
from .codes import EUCLIDEAN, Code, dual, rank_profile

INF = math.inf
#: Above this many codewords distances are taken from the components.
DIRECT_ENUM_LIMIT = 1 << 16


def min_distance(C: Code, metric: str = "hamming", method: str = "auto") -> float:
    """Minimum weight of a nonzero codeword; ``inf`` for the zero code.

    ``method="enumerate"`` scans all codewords; ``"components"`` takes the
    minimum over the CRT components, which is exact for both metrics since a
    codeword's Hamming support is the union of its component supports and
    its Lee weight is the sum of its component Lee weights.
    """
    if C.cardinality == 1:
        return INF
    if method == "auto":
        method = "enumerate" if C.cardinality <= DIRECT_ENUM_LIMIT else "components"
    if metric == "hamming":
        table = (np.arange(C.ring.size) != 0).astype(np.int64)
        ftable = None
    elif metric == "lee":
        table = C.ring.lee_table
        ftable = C.field.weight
    else:
        raise ValueError(f"unknown metric {metric!r}")
    if method == "components":
        return min(linalg.min_weight(c, C.field, ftable) for c in C.components)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    best = INF
    for block in C.iter_blocks():
        w = K.lut_rowsum(block, table)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def hamming_distance_components(C: Code) -> float:
    """``min_i d_H(C_i)``, the CRT formula for the Hamming distance."""
    return min(linalg.min_weight(c, C.field) for c in C.components)


@dataclass(frozen=True)
class BoundReport:
    n: int
    cardinality: int
    d_H: float
    d_L: float
    rank: int
    free_rank: int
    is_free: bool
    singleton_H: Fraction | None
    mdr_bound: int
    mlds_lhs: int | None
    mlds_rhs: int
    mldr_lhs: int | None
    mldr_rhs: int
    is_MDS: bool
    is_MDR: bool
    is_MLDS: bool
    is_MLDR: bool
    lee_step_divides: bool
    free_mldr_implies_mlds: bool | None

    def inequalities_hold(self) -> dict[str, bool]:
        """The four bound inequalities (vacuous for the zero code)."""
        if self.d_H == INF:
            return {"singleton": True, "mdr": True, "mlds": True, "mldr": True}
        return {
            "singleton": self.d_H <= self.singleton_H,
            "mdr": self.d_H <= self.mdr_bound,
            "mlds": self.mlds_lhs <= self.mlds_rhs,
            "mldr": self.mldr_lhs <= self.mldr_rhs,
        }

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("d_H", "d_L"):
            if d[key] == INF:
                d[key] = None
        if d["singleton_H"] is not None:
            s = d["singleton_H"]
            d["singleton_H"] = [s.numerator, s.denominator]
        return d


def singleton_report(C: Code, method: str = "auto") -> BoundReport:
    R, F = C.ring, C.field
    prof = rank_profile(C)
    n, size = C.n, C.cardinality
    d_H = min_distance(C, "hamming", method)
    d_L = min_distance(C, "lee", method)
    lee_unit = F.r * (F.p - 1)
    log_q = C.dimension  # log_q |C|, an integer
    mlds_rhs = R.m * n - log_q
    mldr_rhs = n - prof.rank
    mdr_bound = n - prof.rank + 1
    if d_H == INF:
        return BoundReport(
            n, size, d_H, d_L, prof.rank, prof.free_rank, prof.is_free,
            None, mdr_bound, None, mlds_rhs, None, mldr_rhs,
            False, False, False, False, False, None,
        )
    # log_{|B_k|} |C| = dim / 2^k as an exact rational
    singleton_H = n - Fraction(log_q, R.m) + 1
    d_H, d_L = int(d_H), int(d_L)
    is_mds = size * R.size ** (d_H - 1) == R.size**n
    mlds_lhs = (d_L - 1) // lee_unit
    mldr_lhs = (d_L - 1) // (lee_unit * R.m)
    divides = (d_L - 1) % (lee_unit * R.m) == 0
    is_mlds = mlds_lhs == mlds_rhs
    is_mldr = mldr_lhs == mldr_rhs
    premise = prof.is_free and is_mldr and divides
    return BoundReport(
        n, size, d_H, d_L, prof.rank, prof.free_rank, prof.is_free,
        singleton_H, mdr_bound, mlds_lhs, mlds_rhs, mldr_lhs, mldr_rhs,
        is_mds, d_H == mdr_bound, is_mlds, is_mldr, divides,
        is_mlds if premise else None,
    )


@dataclass(frozen=True)
class RankIdentity:
    rank: int
    free_rank: int
    dual_free_rank: int
    naive_form_holds: bool
    corrected_form_holds: bool


def rank_identity_check(C: Code) -> RankIdentity:
    """Compare ``rk + frk = n`` with ``rk(C) + frk(C^⊥) = n``."""
    prof = rank_profile(C)
    dprof = rank_profile(dual(C, EUCLIDEAN))
    return RankIdentity(
        prof.rank,
        prof.free_rank,
        dprof.free_rank,
        prof.rank + prof.free_rank == C.n,
        prof.rank + dprof.free_rank == C.n,
    )
