"""Command-line front end.

    logint eval --expr "(1-x)/(1-x^6)" --power 2 [--json] [--rel-tol 1e-11]
    logint corpus [--json] [--corpus-file path.json]
    logint constants

Exit codes: 0 ok, 1 corpus failure, 2 parse error, 3 non-integrable,
4 engine-oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from . import engine, oracle, specfun
from .errors import (
    DivisionByZeroPoly,
    NoConvergence,
    ParseError,
    PoleDetected,
    PoleInUnitInterval,
    UnsupportedFactor,
    UnsupportedMultiplicity,
    UnsupportedPole,
    UnsupportedPower,
    UnsupportedQuadratic,
)
from .parser import parse_expression

EXIT_OK = 0
EXIT_CORPUS_FAIL = 1
EXIT_PARSE = 2
EXIT_NON_INTEGRABLE = 3
EXIT_DISAGREEMENT = 4

DISAGREE_RTOL = 1e-8

_OUT_OF_SCOPE = (UnsupportedPole, UnsupportedFactor, UnsupportedMultiplicity,
                 UnsupportedQuadratic, UnsupportedPower)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def eval_report(expr: str, power: int, rel_tol: float) -> tuple[dict, int]:
    """Build the machine-readable eval report and its exit code."""
    report = {"expr": expr, "power": power, "closed_form": None,
              "numeric": 0.0, "oracle": 0.0, "abs_disagreement": 0.0,
              "status": "error", "error": None}
    try:
        f = parse_expression(expr)
    except (ParseError, DivisionByZeroPoly) as exc:
        report["error"] = str(exc)
        return report, EXIT_PARSE
    if power < 0:
        report["error"] = "power must be a non-negative integer"
        return report, EXIT_PARSE

    closed = None
    if power >= 1:
        try:
            closed = engine.integrate_closed_form(f, power)
        except PoleInUnitInterval as exc:
            report["error"] = str(exc)
            return report, EXIT_NON_INTEGRABLE
        except _OUT_OF_SCOPE:
            closed = None  # integrable but outside closed-form scope

    try:
        orc = oracle.integrate_log_power(f, power, rel_tol)
    except (PoleDetected, NoConvergence) as exc:
        report["error"] = str(exc)
        return report, EXIT_NON_INTEGRABLE

    report["oracle"] = orc.value
    if closed is None:
        report.update(status="oracle_only", numeric=orc.value)
        return report, EXIT_OK
    numeric = engine.numeric_value(closed)
    disagreement = abs(numeric - orc.value)
    report.update(closed_form=engine.render(closed), numeric=numeric,
                  abs_disagreement=disagreement)
    if disagreement <= DISAGREE_RTOL * (1.0 + abs(orc.value)):
        report["status"] = "ok"
        return report, EXIT_OK
    report.update(status="error",
                  error=f"engine and oracle disagree by {disagreement:.3e}")
    return report, EXIT_DISAGREEMENT


def _cmd_eval(args) -> int:
    report, code = eval_report(args.expr, args.power, args.rel_tol)
    if args.json:
        print(json.dumps(report))
        return code
    if report["error"] and code in (EXIT_PARSE, EXIT_NON_INTEGRABLE):
        print(f"error: {report['error']}", file=sys.stderr)
        return code
    lines = [
        f"integral     int_0^1 ({args.expr}) * log^{args.power}(x) dx",
        f"closed form  {report['closed_form'] or 'none (oracle only)'}",
        f"numeric      {report['numeric']!r}",
        f"oracle       {report['oracle']!r}",
        f"|delta|      {report['abs_disagreement']:.3e}",
        f"status       {report['status']}",
    ]
    if report["error"]:
        lines.append(f"error        {report['error']}")
    print("\n".join(lines))
    return code


def _cmd_corpus(args) -> int:
    entries = corpus_mod.EMBEDDED
    if args.corpus_file:
        entries = corpus_mod.load_corpus_file(args.corpus_file)
    rows = corpus_mod.run_corpus(entries)
    if args.json:
        payload = []
        for r in rows:
            payload.append({
                "id": r.entry.id, "status": r.status, "rendered": r.rendered,
                "expected_render": r.entry.expected_render,
                "numeric": r.numeric, "expected_numeric": r.entry.expected_numeric,
                "oracle": r.oracle_value, "abs_disagreement": r.abs_disagreement,
                "render_ok": r.render_ok, "numeric_ok": r.numeric_ok,
                "provenance": r.entry.provenance, "error": r.error,
            })
        print(json.dumps(payload))
    else:
        width = max(len(r.entry.id) for r in rows)
        for r in rows:
            if r.status == "error":
                detail = r.error
            else:
                detail = (f"{r.rendered}  numeric={r.numeric:.12g}  "
                          f"|delta|={r.abs_disagreement:.2e}")
                if r.status == "fail":
                    bad = []
                    if not r.render_ok:
                        bad.append(f"render != {r.entry.expected_render!r}")
                    if not r.numeric_ok:
                        bad.append(f"numeric != {r.entry.expected_numeric!r}")
                    detail += "  [" + "; ".join(bad) + "]"
            print(f"{r.entry.id:<{width}}  {r.status.upper():<5}  {detail}")
        passed = sum(r.status == "pass" for r in rows)
        print(f"{passed}/{len(rows)} pass")
    if all(r.status == "pass" for r in rows):
        return EXIT_OK
    failing = [r.entry.id for r in rows if r.status != "pass"]
    print(f"failing: {', '.join(failing)}", file=sys.stderr)
    return EXIT_CORPUS_FAIL


def _cmd_constants(_args) -> int:
    rows = [
        ("pi", math.pi),
        ("psi'(1/3)", specfun.hurwitz_zeta(2, Fraction(1, 3))),
        ("zeta(3)", specfun.zeta(3)),
        ("zeta(5)", specfun.zeta(5)),
        ("zeta(7)", specfun.zeta(7)),
        ("Catalan", specfun.catalan()),
        ("Cl2(pi/3)", specfun.clausen2_pi(Fraction(1, 3))),
        ("Cl2(2pi/3)", specfun.clausen2_pi(Fraction(2, 3))),
    ]
    for name, value in rows:
        print(f"{name:<11}  {value:.15g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logint",
        description="Exact closed forms for int_0^1 R(x) log^p(x) dx, "
                    "validated against an independent quadrature oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a single integral")
    pe.add_argument("--expr", required=True, help='rational integrand, e.g. "1/(1+x)"')
    pe.add_argument("--power", type=int, required=True, help="power of log x")
    pe.add_argument("--json", action="store_true", help="machine-readable report")
    pe.add_argument("--rel-tol", type=float, default=1e-11, dest="rel_tol",
                    help="oracle relative tolerance (default 1e-11)")

    pc = sub.add_parser("corpus", help="run the embedded verification corpus")
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--corpus-file", default=None,
                    help="JSON file with extra/alternative entries")

    sub.add_parser("constants", help="print the named constants")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"eval": _cmd_eval, "corpus": _cmd_corpus,
               "constants": _cmd_constants}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
