"""Seeded property suites behind ``bkcodes verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bounds import min_distance, rank_identity_check, singleton_report
from .codes import EUCLIDEAN, HERMITIAN, Code, crt_combine, dual, inner_product, random_code
from .cyclic import (
    code_from_polycodes,
    component_cyclic_check,
    cyclic_component_generators,
    random_cyclic_code,
)
from .errors import TooLargeToEnumerate
from .field import construct_field
from .ring import Ring, gray_Phi, make_ring, theta_combine, theta_decompose
from .cycint import reduce_group_ring
from .weights import MATRIX_CAP, char_matrix, full_S, cwe, macwilliams, swe, unit_classes

SUITES = ("macwilliams", "crt", "duality", "bounds", "cyclic")
#: Largest ring the exhaustive crt suite will walk.
CRT_CAP = 1 << 16
#: Above this many element pairs the homomorphism checks are sampled.
PAIR_CAP = 1 << 16


@dataclass
class SuiteResult:
    suite: str
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, name: str, **detail) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({"check": name, **detail})

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
        }


def naive_mul(R: Ring, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product in coefficient form using ``v_S v_T = v_{S ∪ T}`` directly.

    ``a`` and ``b`` broadcast against each other on all but the last axis.
    """
    F = R.field
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    out = np.zeros(a.shape, dtype=np.int64)
    for S in range(R.m):
        for T in range(R.m):
            out[..., S | T] = F.add[out[..., S | T], F.mul[a[..., S], b[..., T]]]
    return out


def _spec(C: Code) -> dict:
    from .docs import code_to_spec

    return code_to_spec(C)


def suite_crt(R: Ring, rng: np.random.Generator, count: int, **_) -> SuiteResult:
    res = SuiteResult("crt", {})
    if R.size > CRT_CAP:
        raise TooLargeToEnumerate("|B_k|", R.size, CRT_CAP)
    F = R.field
    idx = np.arange(R.size, dtype=np.int64)
    coeffs = R.unpack(idx[:, None])[:, 0, :]
    gray = R.zeta(coeffs)
    packed = gray @ (R.q ** np.arange(R.m, dtype=np.int64))
    res.check(len(np.unique(packed)) == R.size, "phi bijective")
    big_phi = {tuple(gray_Phi(R, R.element(c))) for c in coeffs}
    res.check(len(big_phi) == R.size, "Phi bijective")
    same = all(tuple(gray_Phi(R, R.element(c))) == tuple(g) for c, g in zip(coeffs, gray))
    res.check(same, "Phi agrees with phi (identity permutation)")
    # additive and multiplicative homomorphism, on all pairs or a seeded sample
    if R.size**2 <= PAIR_CAP:
        I, J = (x.ravel() for x in np.meshgrid(idx, idx, indexing="ij"))
    else:
        I, J = rng.integers(0, R.size, size=(2, count))
    A, B = coeffs[I], coeffs[J]
    res.check(np.array_equal(R.zeta(naive_mul(R, A, B)), F.mul[gray[I], gray[J]]), "phi multiplicative")
    res.check(np.array_equal(R.zeta(F.add[A, B]), F.add[gray[I], gray[J]]), "phi additive")
    # conjugation v_i -> 1 - v_i is a ring automorphism of order 2
    conj = R.conj_table
    res.check(np.array_equal(conj[conj], idx), "conjugation is an involution")
    lhs = conj[R.pack(naive_mul(R, A, B))]
    rhs = R.pack(naive_mul(R, coeffs[conj[I]], coeffs[conj[J]]))
    res.check(np.array_equal(lhs, rhs), "conjugation multiplicative")
    roundtrip = all(theta_combine(R, theta_decompose(R, R.element(c))).index == int(i) for i, c in enumerate(coeffs))
    res.check(roundtrip, "CRT decomposition round-trips")
    return res


def suite_duality(R: Ring, rng: np.random.Generator, count: int, n: int, corrupt: bool = False, **_) -> SuiteResult:
    res = SuiteResult("duality", {"corrupt": corrupt} if corrupt else {})
    total = R.size
    for _ in range(count):
        length = int(rng.integers(1, n + 1))
        C = random_code(R, length, rng)
        for mode in (EUCLIDEAN, HERMITIAN):
            D = dual(C, mode)
            if corrupt:
                # test hook: drop the last row of the first nonzero dual component
                comps = [c.copy() for c in D.components]
                for i, c in enumerate(comps):
                    if c.shape[0]:
                        comps[i] = c[:-1]
                        break
                D = crt_combine(R, length, comps)
            ok = C.cardinality * D.cardinality == total**length
            ok = ok and dual(D, mode) == C
            ok = ok and all(
                inner_product(R, u, w, mode).is_zero() for u in C.generators for w in D.generators
            )
            res.check(ok, f"{mode} dual", spec=_spec(C))
    return res


def suite_macwilliams(R: Ring, rng: np.random.Generator, count: int, n: int, **_) -> SuiteResult:
    res = SuiteResult("macwilliams", {})
    if R.size > MATRIX_CAP:
        raise TooLargeToEnumerate("|B_k|", R.size, MATRIX_CAP)
    T, TH, S = (char_matrix(R, kind) for kind in ("T", "T_H", "S"))
    uc = unit_classes(R)
    full = reduce_group_ring(full_S(R))
    rows_constant = all(
        np.array_equal(full[a], full[b])
        for cls in range(len(uc.reps))
        for a, b in itertools.pairwise(np.flatnonzero(uc.class_of == cls))
    )
    res.check(rows_constant, "character sums constant on unit classes")
    for _ in range(count):
        length = int(rng.integers(1, n + 1))
        C = random_code(R, length, rng)
        W = cwe(C)
        ok = macwilliams(W, T, C.cardinality) == cwe(dual(C, EUCLIDEAN))
        ok = ok and macwilliams(W, TH, C.cardinality) == cwe(dual(C, HERMITIAN))
        ok = ok and macwilliams(swe(C), S, C.cardinality) == swe(dual(C, EUCLIDEAN))
        res.check(ok, "macwilliams transforms", spec=_spec(C))
    return res


def suite_bounds(R: Ring, rng: np.random.Generator, count: int, n: int, **_) -> SuiteResult:
    res = SuiteResult("bounds", {})
    for _ in range(count):
        length = int(rng.integers(1, n + 1))
        C = random_code(R, length, rng)
        rep = singleton_report(C)
        res.check(all(rep.inequalities_hold().values()), "singleton-type inequalities", spec=_spec(C))
        if C.cardinality <= 1 << 16:
            for metric in ("hamming", "lee"):
                same = min_distance(C, metric, "enumerate") == min_distance(C, metric, "components")
                res.check(same, f"{metric} distance by components", spec=_spec(C))
        res.check(rank_identity_check(C).corrected_form_holds, "rk(C) + frk(dual) = n", spec=_spec(C))
    return res


def suite_cyclic(R: Ring, rng: np.random.Generator, count: int, n: int, **_) -> SuiteResult:
    res = SuiteResult("cyclic", {})
    for _ in range(count):
        length = int(rng.integers(1, n + 1))
        C = random_code(R, length, rng)
        for l in range(1, length + 1):
            method = "enumerate" if C.cardinality <= 1 << 12 else "generators"
            res.check(component_cyclic_check(C, l, method).equivalence_holds, f"shift {l} equivalence", spec=_spec(C))
        Z = random_cyclic_code(R, length, rng)
        back = code_from_polycodes(R, length, cyclic_component_generators(Z))
        res.check(back == Z, "generator extraction round-trip", spec=_spec(Z))
    return res


RUNNERS: dict[str, Callable[..., SuiteResult]] = {
    "macwilliams": suite_macwilliams,
    "crt": suite_crt,
    "duality": suite_duality,
    "bounds": suite_bounds,
    "cyclic": suite_cyclic,
}


def run_suite(
    name: str,
    p: int,
    r: int = 1,
    k: int = 1,
    n: int = 2,
    seed: int = 0,
    count: int = 20,
    corrupt: bool = False,
) -> SuiteResult:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    R = make_ring(construct_field(p, r), k)
    rng = np.random.default_rng(seed)
    res = RUNNERS[name](R, rng, count=count, n=n, corrupt=corrupt)
    res.params = {"p": p, "r": r, "k": k, "n": n, "seed": seed, "count": count} | res.params
    return res
