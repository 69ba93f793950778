"""Command-line entry point: ``latgraph {validate,analyze,product,enumerate,verify}``.

Exit status is 0 on success, 1 on a semantic failure (invalid table,
unexpected counterexample) and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graph as g
from .enumeration import DEFAULT_ENUMERATION_CAP, CapExceeded, enumerate_lattices
from .lattice import is_distributive, is_dually_atomic, is_modular
from .products import ProductTooLarge, chain_product, parse_chains
from .semilattice import (
    InvalidMeetTable,
    MalformedTable,
    SemilatticeError,
    atoms,
    check_axioms,
    dual_atoms,
    dumps,
    from_json,
    zero_divisors,
)
from .theorems import THEOREMS, reports_to_json, run_suite, suite_ok

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def cmd_validate(args) -> int:
    doc = _read_json(args.path)
    try:
        if not isinstance(doc, dict) or not {"n", "bottom", "top", "meet"} <= doc.keys():
            raise MalformedTable("instance needs keys n, bottom, top, meet")
        violations = check_axioms(doc["meet"], doc["bottom"], doc["top"])
        if not violations:
            from_json(doc)
    except MalformedTable as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return USAGE
    if violations:
        print(f"invalid: {len(violations)} violation(s)")
        for v in violations:
            print(f"  {v.axiom} {list(v.witness)}")
        return FAILED
    print("valid")
    return OK


def analysis_report(S) -> dict:
    G = g.build_graph(S)
    report = g.metrics(G).to_json()
    modular, mod_witness = is_modular(S)
    distributive, dist_witness = is_distributive(S)
    report.update(
        {
            "n": S.n,
            "vertices": [S.label(v) for v in G.vertices],
            "edges": G.edge_count,
            "components": len(g.connected_components(G)),
            "atoms": [S.label(a) for a in sorted(atoms(S))],
            "dual_atoms": [S.label(d) for d in sorted(dual_atoms(S))],
            "zero_divisors": [S.label(z) for z in sorted(zero_divisors(S))],
            "length": S.order.length,
            "modular": modular,
            "modular_witness": list(mod_witness) if mod_witness else None,
            "distributive": distributive,
            "distributive_witness": list(dist_witness) if dist_witness else None,
            "dually_atomic": is_dually_atomic(S),
        }
    )
    return report


def cmd_analyze(args) -> int:
    doc = _read_json(args.path)
    try:
        S = from_json(doc)
    except InvalidMeetTable as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return FAILED
    except MalformedTable as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return USAGE
    report = analysis_report(S)
    if args.dot:
        G = g.build_graph(S)
        labels = {v: S.label(v) for v in G.vertices}
        Path(args.dot).write_text(g.export_dot(G, labels))
    if args.json:
        print(json.dumps(report, indent=2))
        return OK
    degrees = ", ".join(f"{S.label(int(v))}:{d}" for v, d in report["degrees"].items())
    print(f"elements      {report['n']} (length {report['length']})")
    print(f"graph         {report['shape']}, {len(report['vertices'])} vertices, {report['edges']} edges")
    print(f"degrees       {degrees or '-'}")
    print(f"components    {report['components']} (connected: {report['connected']})")
    print(f"diameter      {report['diameter']}")
    print(f"girth         {report['girth']}")
    print(f"eulerian      {report['eulerian']}")
    print(f"planar        {report['planar']}")
    print(f"atoms         {report['atoms']}")
    print(f"dual atoms    {report['dual_atoms']}")
    print(f"modular       {report['modular']}")
    print(f"distributive  {report['distributive']}")
    return OK


def cmd_product(args) -> int:
    try:
        spec = parse_chains(args.chains)
    except SemilatticeError as exc:
        raise UsageError(str(exc)) from None
    P = chain_product(spec, cap=args.cap)
    print(dumps(P.table))
    return OK


def cmd_enumerate(args) -> int:
    count = 0
    for S in enumerate_lattices(args.n, cap=args.cap):
        count += 1
        if not args.count:
            print(dumps(S))
    if args.count:
        print(count)
    return OK


def cmd_verify(args) -> int:
    reports = run_suite(
        args.max_n,
        args.max_product,
        theorems=args.theorem,
        enumeration_cap=args.cap,
        workers=args.workers,
    )
    for r in reports:
        flag = "FAIL" if r.unexpected else "ok  "
        print(
            f"{flag} {r.theorem:32s} scanned={r.scanned:<5d} applicable={r.applicable:<5d} "
            f"counterexamples={len(r.counterexamples):<3d} {r.verdict}"
        )
    if args.report:
        Path(args.report).write_text(reports_to_json(reports) + "\n")
    return OK if suite_ok(reports) else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latgraph", description="Graphs of finite bounded semilattices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the semilattice axioms of a JSON instance")
    s.add_argument("path", help="instance file, or - for stdin")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="report graph metrics and lattice properties")
    s.add_argument("path", help="instance file, or - for stdin")
    s.add_argument("--dot", metavar="OUT", help="also write the graph in DOT format")
    s.add_argument("--json", action="store_true", help="print the report as JSON")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("product", help="emit a product of chains as a JSON instance")
    s.add_argument("--chains", required=True, help="comma-separated chain lengths, e.g. 1,2")
    s.add_argument("--cap", type=int, default=None, help="element cap (default: $LATGRAPH_MAX_PRODUCT or 10000)")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("enumerate", help="stream all n-element lattices up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jsonl", action="store_true", help="one JSON instance per line (the default)")
    s.add_argument("--count", action="store_true", help="print only the number of instances")
    s.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="sweep every theorem over the instance universes")
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--max-product", type=int, default=200)
    s.add_argument("--report", metavar="OUT", help="write JSON reports to this file")
    s.add_argument("--theorem", action="append", choices=sorted(THEOREMS), help="restrict to these ids")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="largest n allowed")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (CapExceeded, ProductTooLarge) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    except SemilatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
