"""Command-line surface: validate, solve, dual, verify, gen, check-theorems.

Every command prints a machine-readable JSON report on stdout and a short
human summary on stderr.  Exit codes: 0 success or all checks passing, 1 a
property failure or verification rejection, 2 usage or parse problems.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .dual import minimal_dual_solution, search_certificate, weak_dual_value
from .errors import ParseError, PathpackError, SizeLimitError
from .fileio import (
    dump_certificate,
    dump_network,
    format_rational,
    load_certificate,
    load_network,
    load_packing,
)
from .generate import generate
from .network import validate
from .solvers import solve_strong, solve_weak


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict, summary: list[str]) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))
    for line in summary:
        print(line, file=sys.stderr)


def _cmd_validate(args) -> int:
    net = load_network(_read(args.file))
    report = validate(net, require_flat=args.require_flat)
    doc = {
        "command": "validate",
        "file": args.file,
        "checks": [
            {"name": it.name, "passed": it.passed, "detail": it.detail}
            for it in report.items
        ],
        "ok": report.ok,
    }
    _emit(doc, [f"{it.name}: {'ok' if it.passed else 'FAIL'}"
                for it in report.items])
    return 0 if report.ok else 1


def _cmd_solve(args) -> int:
    net = load_network(_read(args.file))
    solver = solve_strong if args.problem == "strong" else solve_weak
    result = solver(net, args.mode)
    doc = {
        "command": "solve",
        "file": args.file,
        "problem": args.problem,
        "mode": args.mode,
        "objective": format_rational(result.objective),
        "paths": [
            {"start": p.nodes[0], "edges": list(p.edges),
             "weight": format_rational(w)}
            for p, w in result.witness.items()
        ],
    }
    _emit(doc, [f"{args.problem}/{args.mode} objective "
                f"{format_rational(result.objective)} "
                f"with {len(result.witness)} paths"])
    return 0


def _cmd_dual(args) -> int:
    net = load_network(_read(args.file))
    expansion = minimal_dual_solution(net, verify=not args.no_verify)
    bound = weak_dual_value(net, expansion)
    theta_fr = solve_weak(net, "fractional").objective
    cert_doc = None
    if net.clutter.is_flat():
        cert, least = search_certificate(net, args.max_inner)
        cert_doc = {
            "value": format_rational(least),
            "certificate": json.loads(dump_certificate(cert)),
        }
    doc = {
        "command": "dual",
        "file": args.file,
        "blocks": {t: sorted(b) for t, b in expansion.blocks},
        "expansionBound": format_rational(bound),
        "fractionalWeakOptimum": format_rational(theta_fr),
        "search": cert_doc,
    }
    summary = [f"minimal dual solution bound {format_rational(bound)} "
               f"(weak optimum {format_rational(theta_fr)})"]
    if cert_doc:
        summary.append(f"least certificate value {cert_doc['value']}")
    _emit(doc, summary)
    return 0 if bound == theta_fr else 1


def _cmd_verify(args) -> int:
    from .dual import verify_certificate

    net = load_network(_read(args.file))
    cert = load_certificate(_read(args.certificate))
    packing = None
    if args.packing:
        packing = load_packing(_read(args.packing), net)
    claimed = Fraction(args.eta) if args.eta else cert.value
    report = verify_certificate(net, cert, claimed, packing)
    doc = {
        "command": "verify",
        "file": args.file,
        "claimed": format_rational(claimed),
        "checks": [
            {"name": it.name, "passed": it.passed, "detail": it.detail}
            for it in report.items
        ],
        "accepted": report.accepted,
    }
    _emit(doc, [("accepted" if report.accepted else "REJECTED")] +
          [f"  {it.name}: {'ok' if it.passed else 'FAIL ' + it.detail}"
           for it in report.items])
    return 0 if report.accepted else 1


def _cmd_gen(args) -> int:
    net = generate(
        args.nodes, args.terminals, args.edges,
        clutter_density=args.clutter_density, seed=args.seed,
        ensure_eulerian=args.ensure_eulerian, ensure_flat=args.ensure_flat,
        ensure_integral=args.ensure_integral, double_edges=args.double_edges)
    text = dump_network(net)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        print(text, end="")
    return 0


def _cmd_check(args) -> int:
    net = load_network(_read(args.file))
    suites = tuple(args.suite.split(",")) if args.suite else checks.SUITE_IDS
    items = checks.run_suites(net, suites, args.max_inner)
    doc = {
        "command": "check-theorems",
        "file": args.file,
        "items": [
            {"suite": it.suite, "name": it.name, "status": it.status,
             "detail": it.detail}
            for it in items
        ],
        "ok": all(it.status != "fail" for it in items),
    }
    width = max(len(f"{it.suite}/{it.name}") for it in items)
    table = [f"{(it.suite + '/' + it.name).ljust(width)}  {it.status.upper()}"
             for it in items]
    _emit(doc, table)
    return 0 if doc["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathpack",
        description="Exact path packing, duals and certificates on terminal "
                    "networks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the property checks on a network")
    p.add_argument("file")
    p.add_argument("--require-flat", action="store_true")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("solve", help="solve the strong or weak problem")
    p.add_argument("file")
    p.add_argument("--problem", choices=("strong", "weak"), required=True)
    p.add_argument("--mode", choices=("integer", "fractional"),
                   default="integer")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("dual", help="minimal dual solution and certificate search")
    p.add_argument("file")
    p.add_argument("--max-inner", type=int, default=None,
                   help="cap on inner nodes assigned per enumerated expansion")
    p.add_argument("--no-verify", action="store_true",
                   help="skip criticality verification of the dual solution")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("verify", help="verify a certificate document")
    p.add_argument("file")
    p.add_argument("--certificate", required=True)
    p.add_argument("--packing", default=None)
    p.add_argument("--eta", default=None,
                   help="claimed strong value as p/q; defaults to the "
                        "certificate value")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--terminals", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--clutter-density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ensure-eulerian", action="store_true")
    p.add_argument("--ensure-flat", action="store_true")
    p.add_argument("--ensure-integral", action="store_true")
    p.add_argument("--double-edges", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("check-theorems",
                       help="run the structural invariant suites")
    p.add_argument("file")
    p.add_argument("--suite", default=None,
                   help=f"comma-separated ids from {','.join(checks.SUITE_IDS)}")
    p.add_argument("--max-inner", type=int, default=None)
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, SizeLimitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PathpackError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
