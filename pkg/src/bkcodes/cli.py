"""``bkcodes`` command line: analyze, verify, search, ring-table."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .docs import ORDERS, ParseError, analyze, dumps, parse_spec, summary
from .errors import BkError, TooLargeToEnumerate
from .field import construct_field
from .ring import gray_Phi, make_ring
from .search import DEFAULT_BUDGET, PREDICATES, search
from .suites import SUITES, run_suite
from .weights import unit_classes

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
#: Largest ring ``ring-table`` will print.
TABLE_CAP = 1 << 12


def _emit(doc: dict, out: str | None, human: str) -> None:
    text = dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    print(human, file=sys.stderr)


def _header() -> dict:
    return {"tool": {"name": "bkcodes", "version": __version__}, "orders": ORDERS}


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.spec).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read code spec: {exc}") from exc
    C, options = parse_spec(doc)
    if args.cap is not None:
        options["cap"] = args.cap
    if args.shift_index is not None:
        options["shift_index"] = args.shift_index
    report = analyze(C, options)
    if args.metric and "bounds" in report:
        key = "d_H" if args.metric == "hamming" else "d_L"
        report["distance"] = {"metric": args.metric, "value": report["bounds"][key]}
    _emit(report, args.out, summary(report))
    return EXIT_OK


def _check_space(args: argparse.Namespace) -> None:
    """Honour ``--cap`` as a limit on the ambient space size ``|B_k|^n``."""
    if args.cap is not None:
        space = (args.p**args.r) ** ((1 << args.k) * args.n)
        if space > args.cap:
            raise TooLargeToEnumerate("|B_k|^n", space, args.cap)


def cmd_verify(args: argparse.Namespace) -> int:
    _check_space(args)
    res = run_suite(
        args.suite, args.p, args.r, args.k, args.n,
        seed=args.seed, count=args.count, corrupt=args.inject_fault,
    )
    doc = _header() | res.as_dict()
    verdict = "pass" if res.passed else f"FAIL ({len(res.failures)} failures)"
    human = f"suite {args.suite}: {res.checks} checks, {verdict}"
    if res.failures:
        human += "\ncounterexample: " + json.dumps(res.failures[0], sort_keys=True)
    _emit(doc, args.out, human)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    _check_space(args)
    R = make_ring(construct_field(args.p, args.r), args.k)
    res = search(R, args.n, args.predicate, budget=args.budget, seed=args.seed)
    doc = _header() | res.as_dict()
    human = f"{args.predicate}: {len(res.witnesses)} witnesses ({res.mode}, {res.examined} candidates)"
    _emit(doc, args.out, human)
    return EXIT_OK


def cmd_ring_table(args: argparse.Namespace) -> int:
    R = make_ring(construct_field(args.p, args.r), args.k)
    cap = args.cap or TABLE_CAP
    if R.size > cap:
        raise TooLargeToEnumerate("|B_k|", R.size, cap)
    uc = unit_classes(R)
    rows = []
    for a in R.elements():
        rows.append(
            {
                "index": a.index,
                "element": str(a),
                "wire": a.wire(),
                "phi": list(a.gray),
                "Phi": list(gray_Phi(R, a)),
                "unit": bool(np.all(np.array(a.gray) != 0)),
                "unit_class": int(uc.class_of[a.index]),
                "conjugate": int(R.conj_table[a.index]),
                "lee_weight": int(R.lee_table[a.index]),
            }
        )
    doc = _header() | {
        "params": {"p": R.field.p, "r": R.field.r, "irr": list(R.field.irr), "k": R.k},
        "elements": rows,
    }
    units = sum(r["unit"] for r in rows)
    _emit(doc, args.out, f"B_{R.k} over F_{R.q}: {R.size} elements, {units} units, {len(uc.reps)} unit classes")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bkcodes", description=__doc__)
    ap.add_argument("--version", action="version", version=f"bkcodes {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON document here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=None, help="enumeration cap")

    ring = argparse.ArgumentParser(add_help=False)
    ring.add_argument("--p", type=int, default=2)
    ring.add_argument("--r", type=int, default=1)
    ring.add_argument("--k", type=int, default=1)

    a = sub.add_parser("analyze", parents=[common], help="analyze a code-spec document")
    a.add_argument("--spec", required=True)
    a.add_argument("--metric", choices=("hamming", "lee"))
    a.add_argument("--shift-index", type=int)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common, ring], help="run a seeded property suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--n", type=int, default=2, help="largest code length")
    v.add_argument("--count", type=int, default=20, help="random instances")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common, ring], help="search codes satisfying a predicate")
    s.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("ring-table", parents=[common, ring], help="dump element, Gray and unit tables")
    t.set_defaults(func=cmd_ring_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except TooLargeToEnumerate as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BkError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
