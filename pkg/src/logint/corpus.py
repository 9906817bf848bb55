"""Embedded verification corpus and its runner.

Every entry is an identity int_0^1 expr * log^power(x) dx = closed form,
checked two ways: the canonical render must match ``expected_render``
exactly, and the engine's numeric value must match ``expected_numeric``
to 1e-9 relative (plus an engine-vs-oracle cross check).

Provenance PAPER marks identities taken from the classical table
literature; DERIVED marks values this project established independently.
J4 is DERIVED: the printed source value 81*pi^3/(81*sqrt(3)) fails against
both quadrature and the brute-force Chebyshev series, which give
8*pi^3/(81*sqrt(3)); the leading 81 is a typo for 8.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import engine, oracle
from .errors import LogIntError
from .parser import parse_expression

NUMERIC_RTOL = 1e-9


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    expr: str
    power: int
    expected_render: str
    expected_numeric: float
    provenance: str  # "PAPER" | "DERIVED"
    comment: str | None = None


EMBEDDED: tuple[CorpusEntry, ...] = (
    CorpusEntry("GR-4.231.1", "1/(1+x)", 1,
                "-pi^2/12", -0.8224670334241132, "PAPER"),
    CorpusEntry("GR-4.233.1", "1/(x^2+x+1)", 1,
                "4*pi^2/27 - (2/9)*psi'(1/3)", -0.7813024128964863, "PAPER"),
    CorpusEntry("GR-4.233.2", "1/(x^2-x+1)", 1,
                "2*pi^2/9 - (1/3)*psi'(1/3)", -1.1719536193447295, "PAPER"),
    CorpusEntry("GR-4.233.3", "x/(x^2+x+1)", 1,
                "-7*pi^2/54 + (1/9)*psi'(1/3)", -0.15766014916783233, "PAPER"),
    CorpusEntry("GR-4.233.4", "x/(x^2-x+1)", 1,
                "5*pi^2/36 - (1/6)*psi'(1/3)", -0.311821131864327, "PAPER"),
    CorpusEntry("GR-4.261.8", "(1-x)/(1-x^6)", 2,
                "4*sqrt(3)*pi^3/243 + 13*zeta(3)/18", 1.7521760195875646, "PAPER"),
    CorpusEntry("HIGHER-LOG4", "(1-x)/(1-x^6)", 4,
                "16*sqrt(3)*pi^5/729 + 605*zeta(5)/54", 23.250718401594778, "PAPER"),
    CorpusEntry("HIGHER-LOG6", "(1-x)/(1-x^6)", 6,
                "448*sqrt(3)*pi^7/6561 + 38255*zeta(7)/108", 714.3755358711176, "PAPER"),
    CorpusEntry("J1", "1/(1+x)", 2,
                "3*zeta(3)/2", 1.8030853547393915, "PAPER"),
    CorpusEntry("J2", "1/(1-x+x^2)", 2,
                "10*sqrt(3)*pi^3/243", 2.2100595293751994, "PAPER"),
    CorpusEntry("J3", "x/(1-x+x^2)", 2,
                "5*sqrt(3)*pi^3/243 - 2*zeta(3)/3", 0.303658495914537, "PAPER"),
    CorpusEntry("J4", "1/(1+x+x^2)", 2,
                "8*sqrt(3)*pi^3/243", 1.7680476235001596, "DERIVED",
                comment="source prints 81*pi^3/(81*sqrt(3)); brute-force series "
                        "2*sum U_k(-1/2)/(k+1)^3 confirms 8*pi^3/(81*sqrt(3)), "
                        "so the 81 is read as a typo for 8"),
)


@dataclass(frozen=True)
class CorpusRow:
    entry: CorpusEntry
    status: str  # "pass" | "fail" | "error"
    rendered: str | None = None
    numeric: float | None = None
    oracle_value: float | None = None
    abs_disagreement: float | None = None
    render_ok: bool = False
    numeric_ok: bool = False
    error: str | None = None


def run_entry(entry: CorpusEntry, rel_tol: float = 1e-11) -> CorpusRow:
    """Evaluate one entry through both routes and compare to expectations."""
    try:
        f = parse_expression(entry.expr)
        closed = engine.integrate_closed_form(f, entry.power)
        rendered = engine.render(closed)
        numeric = engine.numeric_value(closed)
        orc = oracle.integrate_log_power(f, entry.power, rel_tol)
    except LogIntError as exc:
        return CorpusRow(entry, "error", error=f"{type(exc).__name__}: {exc}")
    render_ok = rendered == entry.expected_render
    numeric_ok = (abs(numeric - entry.expected_numeric)
                  <= NUMERIC_RTOL * abs(entry.expected_numeric))
    oracle_ok = abs(numeric - orc.value) <= NUMERIC_RTOL * (1.0 + abs(orc.value))
    status = "pass" if (render_ok and numeric_ok and oracle_ok) else "fail"
    return CorpusRow(entry, status, rendered, numeric, orc.value,
                     abs(numeric - entry.expected_numeric), render_ok, numeric_ok)


def run_corpus(entries: tuple[CorpusEntry, ...] = EMBEDDED,
               rel_tol: float = 1e-11, workers: int = 4) -> list[CorpusRow]:
    """Run all entries (concurrently; everything underneath is pure) and
    return rows ordered by entry id."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda e: run_entry(e, rel_tol), entries))
    return sorted(rows, key=lambda r: r.entry.id)


_REQUIRED_KEYS = {"id", "expr", "power", "expected_render", "expected_numeric",
                  "provenance"}


def load_corpus_file(path: str | Path) -> tuple[CorpusEntry, ...]:
    """Read a JSON corpus (same schema as the embedded one) and validate it."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("corpus file must hold a JSON array of entries")
    entries = []
    for i, item in enumerate(raw):
        missing = _REQUIRED_KEYS - set(item)
        if missing:
            raise ValueError(f"corpus entry {i}: missing keys {sorted(missing)}")
        if item["provenance"] not in ("PAPER", "DERIVED"):
            raise ValueError(f"corpus entry {i}: provenance must be PAPER or DERIVED")
        expected = float(item["expected_numeric"])
        if expected != expected or expected in (float("inf"), float("-inf")):
            raise ValueError(f"corpus entry {i}: expected_numeric must be finite")
        parse_expression(item["expr"])  # entries must at least parse
        entries.append(CorpusEntry(
            id=str(item["id"]), expr=str(item["expr"]), power=int(item["power"]),
            expected_render=str(item["expected_render"]),
            expected_numeric=expected, provenance=item["provenance"],
            comment=item.get("comment")))
    return tuple(entries)


def entry_to_dict(entry: CorpusEntry) -> dict:
    out = {"id": entry.id, "expr": entry.expr, "power": entry.power,
           "expected_render": entry.expected_render,
           "expected_numeric": entry.expected_numeric,
           "provenance": entry.provenance}
    if entry.comment is not None:
        out["comment"] = entry.comment
    return out
