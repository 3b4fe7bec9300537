"""Code-spec and report documents (JSON) with the frozen wire encodings."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict
from typing import Any

import numpy as np

from . import __version__
from .bounds import rank_identity_check, singleton_report
from .codes import ENUM_CAP, Code, code_new, minimal_generating_set, rank_profile, self_dual_status
from .cyclic import component_cyclic_check
from .errors import BkError, TooLargeToEnumerate
from .ring import Ring, make_ring
from .field import construct_field
from .weights import cwe, hamming_we, lee_we

SPEC_KEYS = {"p", "r", "irr", "k", "n", "generators", "options"}
OPTION_KEYS = {"cap", "shift_index", "analyses", "metric"}
ANALYSES = ("size", "duals", "enumerators", "bounds", "cyclic", "generating_set")

ORDERS = {
    "subsets": "bitmask-ascending (bit j-1 set iff v_j in S)",
    "field_code": "sum_i c_i p^i over the polynomial basis",
    "element_index": "sum_S code(alpha_S) q^S",
    "gray": "evaluation at bitmask points, component-major de-interleave",
}


class ParseError(BkError, ValueError):
    pass


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def vector_wire(R: Ring, vec: np.ndarray) -> list:
    return [[R.field.coeffs(int(c)) for c in row] for row in np.asarray(vec)]


def code_to_spec(C: Code, generators: list | None = None, options: dict | None = None) -> dict:
    F = C.field
    gens = C.generators if generators is None else generators
    doc = {
        "p": F.p,
        "r": F.r,
        "irr": list(F.irr),
        "k": C.ring.k,
        "n": C.n,
        "generators": [vector_wire(C.ring, g) for g in gens],
    }
    if options:
        doc["options"] = options
    return doc


def parse_spec(doc: dict) -> tuple[Code, dict]:
    """Validate a code-spec document and build the code."""
    if not isinstance(doc, dict):
        raise ParseError("code spec must be a JSON object")
    unknown = set(doc) - SPEC_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    missing = {"p", "k", "n"} - set(doc)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    options = dict(doc.get("options") or {})
    bad = set(options) - OPTION_KEYS
    if bad:
        raise ParseError(f"unknown option keys: {sorted(bad)}")
    for a in options.get("analyses", []):
        if a not in ANALYSES:
            raise ParseError(f"unknown analysis {a!r}")
    try:
        F = construct_field(int(doc["p"]), int(doc.get("r", 1)), doc.get("irr"))
        R = make_ring(F, int(doc["k"]))
        n = int(doc["n"])
        gens = []
        for g in doc.get("generators", []):
            if len(g) != n:
                raise ParseError(f"generator has {len(g)} entries, expected {n}")
            gens.append([R.from_wire(x).coeffs for x in g])
        C = code_new(R, n, [np.array(g, dtype=np.int64).reshape(n, R.m) for g in gens])
    except ParseError:
        raise
    except (BkError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    return C, options


def _distribution(W) -> list[list[int]]:
    return [[e[0], c] for e, c in W.sorted_terms()]


def analyze(C: Code, options: dict | None = None) -> dict:
    """Report document for ``C``; raises :class:`TooLargeToEnumerate` past the cap."""
    options = options or {}
    cap = int(options.get("cap", ENUM_CAP))
    analyses = options.get("analyses") or list(ANALYSES)
    F = C.field
    prof = rank_profile(C)
    report: dict[str, Any] = {
        "tool": {"name": "bkcodes", "version": __version__},
        "orders": ORDERS,
        "params": {"p": F.p, "r": F.r, "irr": list(F.irr), "k": C.ring.k, "n": C.n},
        "cardinality": C.cardinality,
        "component_ranks": list(C.component_ranks),
        "rank_profile": asdict(prof) | {"component_ranks": list(prof.component_ranks)},
    }
    needs_enum = {"enumerators", "bounds"} & set(analyses) or "duals" in analyses
    if needs_enum and C.cardinality > cap:
        raise TooLargeToEnumerate("|C|", C.cardinality, cap)
    if "duals" in analyses:
        report["self_dual"] = self_dual_status(C, cap=cap).as_dict()
    if "enumerators" in analyses:
        W = cwe(C, cap)
        blob = dumps(W.serialize()).encode()
        report["enumerators"] = {
            "hamming": _distribution(hamming_we(C, cap)),
            "lee": _distribution(lee_we(C, cap)),
            "cwe_terms": len(W.terms),
            "cwe_sha256": hashlib.sha256(blob).hexdigest(),
        }
    if "bounds" in analyses:
        report["bounds"] = singleton_report(C).as_dict()
        report["rank_identity"] = asdict(rank_identity_check(C))
    if "generating_set" in analyses:
        report["minimal_generating_set"] = [vector_wire(C.ring, u) for u in minimal_generating_set(C)]
    l = options.get("shift_index")
    if "cyclic" in analyses and l is not None:
        chk = component_cyclic_check(C, int(l))
        report["cyclic"] = {
            "shift_index": int(l),
            "quasi_cyclic": chk.code_qc,
            "components_qc": list(chk.components_qc),
            "equivalence_holds": chk.equivalence_holds,
        }
    return report


def summary(report: dict) -> str:
    p = report["params"]
    lines = [
        f"B_{p['k']} over F_{p['p'] ** p['r']}, n={p['n']}: |C|={report['cardinality']}, "
        f"component ranks {report['component_ranks']}"
    ]
    if "self_dual" in report:
        sd = report["self_dual"]
        lines.append(f"euclidean self-dual: {sd['euclid_dual']}, hermitian self-dual: {sd['hermitian_dual']}")
    if "bounds" in report:
        b = report["bounds"]
        lines.append(
            f"d_H={b['d_H']} d_L={b['d_L']} MDS={b['is_MDS']} MDR={b['is_MDR']} "
            f"MLDS={b['is_MLDS']} MLDR={b['is_MLDR']}"
        )
    if "cyclic" in report:
        c = report["cyclic"]
        lines.append(f"quasi-cyclic index {c['shift_index']}: {c['quasi_cyclic']} (components {c['components_qc']})")
    return "\n".join(lines)
