"""Exhaustive or seeded-random search for codes with a given property."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bounds import singleton_report
from .codes import EUCLIDEAN, HERMITIAN, Code, crt_combine, dual, minimal_generating_set, random_code
from .field import GF
from .ring import Ring

PREDICATES: dict[str, Callable[[Code], bool]] = {
    "self_dual_euclid": lambda C: C == dual(C, EUCLIDEAN),
    "self_dual_herm": lambda C: C == dual(C, HERMITIAN),
    "mds": lambda C: singleton_report(C).is_MDS,
    "mdr": lambda C: singleton_report(C).is_MDR,
    "mlds": lambda C: singleton_report(C).is_MLDS,
    "mldr": lambda C: singleton_report(C).is_MLDR,
}
DEFAULT_BUDGET = 1 << 14


def subspaces(F: GF, n: int) -> Iterator[np.ndarray]:
    """Every subspace of F^n, as its RREF basis, in a fixed order."""
    q = F.q
    for t in range(n + 1):
        for piv in itertools.combinations(range(n), t):
            free = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
            for vals in itertools.product(range(q), repeat=len(free)):
                M = np.zeros((t, n), dtype=np.int64)
                for i, p in enumerate(piv):
                    M[i, p] = 1
                for (i, j), x in zip(free, vals):
                    M[i, j] = x
                yield M


def subspace_count(q: int, n: int) -> int:
    total = 0
    for t in range(n + 1):
        num = den = 1
        for i in range(t):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


@dataclass
class SearchResult:
    predicate: str
    params: dict
    mode: str
    examined: int
    witnesses: list[Code] = field(default_factory=list)

    def as_dict(self) -> dict:
        from .docs import code_to_spec

        return {
            "predicate": self.predicate,
            "params": self.params,
            "mode": self.mode,
            "examined": self.examined,
            "witnesses": [code_to_spec(C, minimal_generating_set(C)) for C in self.witnesses],
        }


def search(
    R: Ring,
    n: int,
    predicate: str,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> SearchResult:
    """Codes of length ``n`` over ``R`` satisfying ``predicate``.

    Every code is the CRT combination of one subspace per component, so when
    the number of such tuples fits in ``budget`` the walk over them covers
    all codes exactly once.  Otherwise ``budget`` seeded random codes are
    drawn.  Witnesses are deduplicated by codeword set and sorted by their
    component key.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    test = PREDICATES[predicate]
    params = {"p": R.field.p, "r": R.field.r, "k": R.k, "n": n, "budget": budget, "seed": seed}
    total = subspace_count(R.q, n) ** R.m
    found: dict[tuple, Code] = {}
    if total <= budget:
        mode = "exhaustive"
        spaces = list(subspaces(R.field, n))
        candidates = (crt_combine(R, n, combo) for combo in itertools.product(spaces, repeat=R.m))
        examined = total
    else:
        mode = "random"
        rng = np.random.default_rng(seed)
        candidates = (random_code(R, n, rng, max_gens=n) for _ in range(budget))
        examined = budget
    for C in candidates:
        key = _order_key(C)
        if key not in found and test(C):
            found[key] = C
    return SearchResult(predicate, params, mode, examined, [found[k] for k in sorted(found)])


def _order_key(C: Code) -> tuple:
    return tuple((c.shape[0], tuple(c.ravel().tolist())) for c in C.components)
