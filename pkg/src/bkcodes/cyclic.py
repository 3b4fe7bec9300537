"""Cyclic and quasi-cyclic codes over B_k and their Gray components."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import Code, as_vector, code_new, crt_combine
from .errors import BadShift, NotCyclic, ShapeMismatch
from .field import GF
from .ring import Ring


def shift(x, l: int, R: Ring | None = None) -> np.ndarray:
    """Right cyclic shift by ``l``: position ``i`` moves to ``i + l mod n``."""
    arr = as_vector(R, x) if R is not None else np.asarray(x)
    n = arr.shape[0]
    if not 1 <= l <= n:
        raise BadShift(f"shift index {l} outside [1, {n}]")
    return np.roll(arr, l, axis=0)


def _component_qc(comp: np.ndarray, l: int, F: GF) -> bool:
    if comp.shape[0] == 0:
        return True
    return linalg.in_rowspace(np.roll(comp, l, axis=1), comp, F)


def is_quasi_cyclic(C: Code, l: int, method: str = "generators") -> bool:
    """Closure of ``C`` under the right shift by ``l``.

    ``"generators"`` shifts each generator and tests membership;
    ``"enumerate"`` shifts every codeword and compares codeword sets.
    """
    if not 1 <= l <= C.n:
        raise BadShift(f"shift index {l} outside [1, {C.n}]")
    if method == "generators":
        return all(C.contains(np.roll(g, l, axis=0)) for g in C.generators)
    if method == "enumerate":
        words = C.codewords()
        have = {w.tobytes() for w in words}
        return all(np.roll(w, l).tobytes() in have for w in words)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ComponentCyclicCheck:
    components_qc: tuple[bool, ...]
    code_qc: bool
    equivalence_holds: bool


def component_cyclic_check(C: Code, l: int, method: str = "generators") -> ComponentCyclicCheck:
    comps = tuple(_component_qc(c, l, C.field) for c in C.components)
    whole = is_quasi_cyclic(C, l, method)
    return ComponentCyclicCheck(comps, whole, whole == all(comps))


# -- polynomials over F_q (coefficient arrays, constant term first) ---------------


def _trim(a: Sequence[int]) -> list[int]:
    a = [int(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: Sequence[int], b: Sequence[int], F: GF) -> tuple[list[int], list[int]]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.inverse(b[-1])
    quo = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = int(F.mul[a[-1], inv])
        s = len(a) - len(b)
        quo[s] = c
        for i, bi in enumerate(b):
            a[s + i] = int(F.sub[a[s + i], F.mul[c, bi]])
        a = _trim(a)
    return _trim(quo), a


def poly_gcd(a: Sequence[int], b: Sequence[int], F: GF) -> list[int]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b, F)[1]
    if not a:
        return []
    inv = F.inverse(a[-1])
    return [int(F.mul[inv, x]) for x in a]


def xn_minus_1(n: int, F: GF) -> list[int]:
    return [int(F.neg[1])] + [0] * (n - 1) + [1]


def poly_span(g: Sequence[int], n: int, F: GF) -> np.ndarray:
    """RREF of ``{x^i g(x) mod x^n - 1}``, the cyclic code generated by ``g``."""
    g = _trim(g)
    if not g:
        return np.zeros((0, n), dtype=np.int64)
    base = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(g):
        base[i % n] = F.add[base[i % n], c]
    rows = np.array([np.roll(base, i) for i in range(n)])
    return linalg.rref(rows, F)


@dataclass(frozen=True)
class PolyCode:
    index: int
    generators: tuple[tuple[int, ...], ...]


def cyclic_component_generators(C: Code) -> list[PolyCode]:
    """Monic generator polynomial of each (cyclic) component.

    The zero component gets ``x^n - 1``; otherwise ``g = gcd(x^n - 1, rows)``.
    """
    F, n = C.field, C.n
    out = []
    for i, comp in enumerate(C.components):
        g = xn_minus_1(n, F)
        for row in comp:
            g = poly_gcd(g, row, F)
        if not linalg.same_rowspace(poly_span(g, n, F), comp, F) and comp.shape[0]:
            raise NotCyclic(f"component {i} is not cyclic")
        out.append(PolyCode(i, (tuple(g),)))
    return out


def qc_component_generators(C: Code) -> list[PolyCode]:
    """Generators for quasi-cyclic components: the component basis rows themselves."""
    return [PolyCode(i, tuple(tuple(int(x) for x in row) for row in comp)) for i, comp in enumerate(C.components)]


def _poly_vector(g: Sequence[int], n: int, F: GF) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(_trim(g)):
        v[i % n] = F.add[v[i % n], c]
    return v


def lift_generators(
    R: Ring, n: int, polycodes: Sequence[PolyCode], basis: str = "idempotent", l: int = 1
) -> list[np.ndarray]:
    """Generators over B_k for the code with the given component generators.

    ``basis="idempotent"`` multiplies each generator of component ``i`` by
    the primitive idempotent of coordinate ``i`` (gray vector ``e_i``), so
    every component is reproduced exactly.  ``basis="monomial"`` gives the
    family ``{v_S ĝ}`` over all subsets ``S``, whose span puts the sum of all
    component codes into every component.  Shifts by multiples of ``l`` of
    each lifted vector are included, so for ``l = 1`` the result generates a
    cyclic code as a B_k-module and in general a quasi-cyclic one of index ``l``.
    """
    if not 1 <= l <= n:
        raise BadShift(f"shift index {l} outside [1, {n}]")
    if len(polycodes) != R.m:
        raise ShapeMismatch(f"need {R.m} component generator lists, got {len(polycodes)}")
    F = R.field
    out = []
    for pc in polycodes:
        for g in pc.generators:
            if len(_trim(g)) > n and g != tuple(xn_minus_1(n, F)):
                raise ShapeMismatch(f"generator of degree >= {n}")
            vec = _poly_vector(g, n, F)
            if not vec.any():
                continue
            for t in range(0, n, l):
                shifted = np.roll(vec, t)
                if basis == "idempotent":
                    gray = np.zeros((n, R.m), dtype=np.int64)
                    gray[:, pc.index] = shifted
                    out.append(R.moebius(gray))
                elif basis == "monomial":
                    for S in range(R.m):
                        coeffs = np.zeros((n, R.m), dtype=np.int64)
                        coeffs[:, S] = shifted
                        out.append(coeffs)
                else:
                    raise ValueError(f"unknown basis {basis!r}")
    return out


def code_from_polycodes(
    R: Ring, n: int, polycodes: Sequence[PolyCode], basis: str = "idempotent", l: int = 1
) -> Code:
    return code_new(R, n, lift_generators(R, n, polycodes, basis, l))


def random_cyclic_code(R: Ring, n: int, rng: np.random.Generator) -> Code:
    """Cyclic code with component ``i`` generated by ``gcd(x^n - 1, random poly)``."""
    F = R.field
    comps = []
    for _ in range(R.m):
        f = [int(x) for x in rng.integers(0, F.q, size=n)]
        g = poly_gcd(xn_minus_1(n, F), f, F) if any(f) else xn_minus_1(n, F)
        comps.append(poly_span(g, n, F) if g != xn_minus_1(n, F) else np.zeros((0, n), dtype=np.int64))
    return crt_combine(R, n, comps)
