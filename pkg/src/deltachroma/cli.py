"""``deltachroma`` command line.

Exit status: 0 on success, 1 for usage or schema errors (and refused caps),
2 when the input is rejected mathematically (not a delta-matroid, not
binary), 3 when a verification sweep records failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .binary import (
    ENUM_CAP,
    binary_witness,
    enumerate_binary_delta_matroids,
    is_even,
    is_graphical,
)
from .fourterm import (
    INVARIANTS,
    primitive_value_span,
    sweep_family,
    sweep_four_term,
    sweep_interlacement,
    sweep_lemma_graphical,
    sweep_moves,
)
from .schemas import SchemaError, dump_report, dump_set_system, dump_symfunc, parse_input, to_set_system
from .setsystem import SetSystem, SetSystemError, elements_of, factorize_connected, find_sea_violation
from .symfunc import chromatic, format_t_poly, specialize_all
from .xpoly import format_poly

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_FAILURES = 0, 1, 2, 3

VERIFY_KINDS = ("4t", "moves", "span", "lemma-graphical", "interlacement", "family")


class UsageError(Exception):
    pass


class Rejected(Exception):
    """Input is well formed but mathematically unacceptable."""

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _load_system(path: str) -> SetSystem:
    tag, value = parse_input(_read_json(path))
    return to_set_system(tag, value)


def _sea_detail(S: SetSystem, witness: tuple[int, int, int]) -> dict:
    names = S.names()
    X, Y, a = witness
    return {
        "X": [names[i] for i in elements_of(X)],
        "Y": [names[i] for i in elements_of(Y)],
        "a": names[a],
    }


def _require_binary(S: SetSystem) -> None:
    if not S.is_proper:
        raise Rejected("set system has no feasible sets")
    w = find_sea_violation(S)
    if w is not None:
        d = _sea_detail(S, w)
        raise Rejected(f"not a delta-matroid: exchange fails for X={d['X']}, Y={d['Y']}, a={d['a']}", d)
    if binary_witness(S) is None:
        raise Rejected("not binary: no twist by a feasible set is graphical")


def _emit(payload: Any, fmt: str, text: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(payload, out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def cmd_chromatic(args) -> int:
    S = _load_system(args.input)
    _require_binary(S)
    s = chromatic(S)
    if args.x is not None:
        s = s.substitute_x(_rational(args.x))
    if args.specialize is None:
        _emit(dump_symfunc(s), args.format, str(s))
        return EXIT_OK
    spec = args.specialize
    if spec.isidentifier():
        text = format_t_poly(specialize_all(s), spec)
        _emit({"variable": spec, "polynomial": text}, args.format, text)
    else:
        value = specialize_all(s, _rational(spec))
        _emit({"at": str(_rational(spec)), "value": str(value)}, args.format, str(value))
    return EXIT_OK


def _diagnostics(S: SetSystem) -> dict:
    names = S.names()
    witness = find_sea_violation(S) if S.is_proper else None
    is_dm = S.is_proper and witness is None
    diag: dict[str, Any] = {
        "is_proper": S.is_proper,
        "is_delta_matroid": is_dm,
        "is_binary": is_dm and binary_witness(S) is not None,
        "is_even": is_even(S),
        "is_graphical": is_dm and is_graphical(S),
        "connected_blocks": [[names[i] for i in B] for B in factorize_connected(S).blocks]
        if S.is_proper
        else [],
    }
    if witness is not None:
        diag["sea_violation"] = _sea_detail(S, witness)
    return diag


def _set_text(S: SetSystem) -> str:
    names = S.names()
    sets = ", ".join("{" + ",".join(names[i] for i in elements_of(F)) + "}" for F in S.feasible)
    return f"ground: {' '.join(names)}\nfeasible: {sets or '(none)'}"


def cmd_convert(args) -> int:
    S = _load_system(args.input)
    diag = _diagnostics(S)
    lines = [_set_text(S)]
    for key, value in diag.items():
        if key == "sea_violation":
            value = f"X={value['X']} Y={value['Y']} a={value['a']}"
        lines.append(f"{key}: {value}")
    _emit({"delta_matroid": dump_set_system(S), "diagnostics": diag}, args.format, "\n".join(lines))
    return EXIT_OK if diag["is_delta_matroid"] else EXIT_REJECTED


def _span_report(n: int, even_only: bool) -> dict:
    r = primitive_value_span(n, even_only)
    claims = {
        "zero_linear_space_contained": r.contains_zero_linear_space,
        "dimension_at_least_grading": r.dimension >= n,
    }
    failures = [{"claim": c} for c, ok in claims.items() if not ok]
    return {
        "kind": "span",
        "grading": n,
        "even_only": even_only,
        "instances": len(claims),
        "passes": len(claims) - len(failures),
        "failures": len(failures),
        "domain_size": r.instances,
        "dimension": r.dimension,
        "basis": [str(b) for b in r.basis],
        "distinct_values": [str(v) for v in r.distinct_values],
        "contains_x": r.contains_x,
        "missing_monomials": [format_poly([0] * i + [1], "x") for i in r.missing_monomials],
        "claims": claims,
        "witnesses": failures,
    }


def _run_verify(args) -> tuple[dict, str]:
    g = args.grading
    if args.kind == "4t":
        invariants = args.invariant or list(INVARIANTS)
        return sweep_four_term(g, invariants, args.even, args.jobs), "4t-report/v1"
    if args.kind == "moves":
        return sweep_moves(g, args.even, args.jobs), "moves-report/v1"
    if args.kind == "span":
        return _span_report(g, args.even), "span-report/v1"
    if args.kind == "lemma-graphical":
        return sweep_lemma_graphical(g, args.even), "lemma-report/v1"
    if args.kind == "interlacement":
        return sweep_interlacement(g), "interlacement-report/v1"
    return sweep_family(g), "family-report/v1"


def _report_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in ("witnesses", "cases"):
            continue
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, list):
            value = ", ".join(map(str, value)) or "(none)"
        lines.append(f"{key}: {value}")
    for case in report.get("cases", []):
        found = case.get("value", "not found")
        lines.append(f"  n={case['n']} k={case['k']}: {found} ({case['layouts_tried']} layouts)")
    if report.get("failures"):
        lines.append(f"witnesses shown: {len(report['witnesses'])}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    report, schema = _run_verify(args)
    meta = {"tool": "deltachroma", "version": __version__, "kind": args.kind, "jobs": args.jobs}
    payload = dump_report(report, schema, meta)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    _emit(payload, args.format, _report_text(report))
    return EXIT_FAILURES if report["failures"] else EXIT_OK


def cmd_enumerate(args) -> int:
    classes = enumerate_binary_delta_matroids(args.grading, even_only=args.even, extended=args.extended)
    payload = {
        "schema": "enumeration/v1",
        "grading": args.grading,
        "even_only": args.even,
        "count": len(classes),
        "classes": [dump_set_system(D) for D in classes],
    }
    text = [f"{len(classes)} classes"]
    text += ["  " + _set_text(D).split("\n")[1].removeprefix("feasible: ") for D in classes]
    _emit(payload, args.format, "\n".join(text))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--cap", type=int, help="lower every size cap to this value (never raises them)")

    p = _Parser(prog="deltachroma", description="Chromatic invariants of binary delta-matroids.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("chromatic", parents=[common], help="chromatic symmetric function of an input")
    c.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    c.add_argument(
        "--specialize",
        nargs="?",
        const="t",
        metavar="T",
        help="set every p_k to T: a variable name gives a polynomial, a rational gives a value",
    )
    c.add_argument("--x", metavar="R", help="substitute the rational R for x")
    c.set_defaults(func=cmd_chromatic)

    v = sub.add_parser("verify", parents=[common], help="run an exhaustive verification sweep")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("--grading", type=int, default=3)
    v.add_argument("--even", action="store_true", help="restrict to even delta-matroids")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--invariant", action="append", choices=sorted(INVARIANTS), help="4t only; repeatable")
    v.add_argument("--output", help="also write the JSON report to this file")
    v.set_defaults(func=cmd_verify)

    cv = sub.add_parser("convert", parents=[common], help="convert an input to its delta-matroid")
    cv.add_argument("input", nargs="?", default="-")
    cv.set_defaults(func=cmd_convert)

    e = sub.add_parser("enumerate", parents=[common], help="list binary delta-matroid classes")
    e.add_argument("--grading", type=int, default=ENUM_CAP)
    e.add_argument("--even", action="store_true")
    e.add_argument("--extended", action="store_true", help="allow grading 5")
    e.set_defaults(func=cmd_enumerate)
    return p


def _lower_cap(value: int) -> None:
    if value < 0:
        raise UsageError("--cap must be non-negative")
    current = os.environ.get("DELTA_CHROMA_CAP", "").strip()
    if current:
        value = min(value, int(current))
    os.environ["DELTA_CHROMA_CAP"] = str(value)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("DELTA_CHROMA_CAP")
    try:
        if args.cap is not None:
            _lower_cap(args.cap)
        return args.func(args)
    except Rejected as exc:
        print(f"deltachroma: rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except (UsageError, SchemaError, SetSystemError) as exc:
        print(f"deltachroma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if saved is None:
            os.environ.pop("DELTA_CHROMA_CAP", None)
        else:
            os.environ["DELTA_CHROMA_CAP"] = saved


if __name__ == "__main__":
    raise SystemExit(main())
