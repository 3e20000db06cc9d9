"""Command-line interface.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 usage
error. JSON output writes every number as a decimal string so that no
consumer can silently round a large coefficient.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suites
from .chebyshev import ChebKind, gen_closed_form, gen_recurrence
from .errors import ChebAlgError
from .rational import cross_check
from .roots import isolate_roots, refine

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _kind(s: str) -> ChebKind:
    try:
        return ChebKind.parse(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {s}")
    return n


def _positive(s: str) -> int:
    n = _nonneg(s)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {s}")
    return n


def _dyadic(s: str) -> Fraction:
    try:
        w = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")
    if w <= 0:
        raise argparse.ArgumentTypeError(f"width must be positive: {s}")
    if w.denominator & (w.denominator - 1):
        raise argparse.ArgumentTypeError(f"width must be dyadic (denominator a power of 2): {s}")
    return w


def _rat(x: Fraction) -> str:
    return str(Fraction(x))


def _coeffs(p) -> list[str]:
    return [str(c) for c in p.coeffs]


def _document(command: str, payload: dict, status: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "payload": payload, "status": status}


def cmd_gen(args) -> tuple[dict, str, int]:
    kind, n = args.kind, args.n
    if args.method == "closed-form":
        if kind is ChebKind.SHIFTED_FIRST:
            raise UsageError("closed-form generation supports T and U only")
        if n < 1:
            raise UsageError("closed-form generation requires n >= 1")
        p = gen_closed_form(kind, n)
    else:
        p = gen_recurrence(kind, n)
    doc = _document("gen", {"kind": kind.value, "n": str(n), "method": args.method,
                            "coefficients": _coeffs(p)}, "n/a")
    return doc, " ".join(_coeffs(p)) if p.coeffs else "0", EXIT_OK


def cmd_verify(args) -> tuple[dict, str, int]:
    only = None
    if args.only is not None:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = sorted(set(only) - set(suites.SUITES))
        if unknown or not only:
            raise UsageError(f"unknown suite(s): {', '.join(unknown) or '(empty)'}; "
                             f"choose from {', '.join(suites.SUITES)}")
    results = suites.run(args.max_n, only)
    ok = all(r.passed for r in results)
    entries, lines = [], []
    for r in results:
        entry = {"name": r.name, "status": "pass" if r.passed else "fail",
                 "checks": str(r.checks), "failures": []}
        for f in r.failures:
            item = {"n": str(f.n), "detail": f.detail}
            if f.witness is not None:
                item["witness"] = _coeffs(f.witness)
            entry["failures"].append(item)
        entries.append(entry)
        lines.append(f"{r.name}: {entry['status']} ({r.checks} checks)")
        for f in r.failures:
            lines.append(f"  n={f.n}: {f.detail}")
            if f.witness is not None:
                lines.append(f"    witness: {' '.join(_coeffs(f.witness))}")
    lines.append("overall: " + ("pass" if ok else "fail"))
    doc = _document("verify", {"max_n": str(args.max_n), "suites": entries},
                    "pass" if ok else "fail")
    return doc, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def _default_range(kind: ChebKind) -> tuple[int, int]:
    return (0, 1) if kind is ChebKind.SHIFTED_FIRST else (-1, 1)


def cmd_isolate(args) -> tuple[dict, str, int]:
    p = gen_recurrence(args.kind, args.n)
    a, b = _default_range(args.kind)
    intervals = isolate_roots(p, a, b)
    if args.width is not None:
        intervals = [refine(p, iv, args.width) for iv in intervals]
    items, lines = [], []
    for iv in intervals:
        item = {"lo": _rat(iv.lo), "hi": _rat(iv.hi)}
        if iv.is_exact():
            item["exact"] = _rat(iv.exact)
            lines.append(f"exact {_rat(iv.exact)}")
        else:
            lines.append(f"({_rat(iv.lo)}, {_rat(iv.hi)}]")
        items.append(item)
    payload = {"kind": args.kind.value, "n": str(args.n), "range": [str(a), str(b)],
               "intervals": items}
    if args.width is not None:
        payload["width"] = _rat(args.width)
    return _document("roots isolate", payload, "n/a"), "\n".join(lines), EXIT_OK


def cmd_rational(args) -> tuple[dict, str, int]:
    rep = cross_check(args.kind, args.n)
    computed = [_rat(x) for x in sorted(rep.computed)]
    expected = [_rat(x) for x in sorted(rep.expected)]
    monic = [_rat(x) for x in sorted(rep.computed_monic)]
    payload = {"kind": args.kind.value, "n": str(args.n), "computed": computed,
               "computed_monic": monic, "expected": expected, "agrees": rep.agrees}
    lines = [f"computed: {' '.join(computed)}", f"computed_monic: {' '.join(monic)}",
             f"expected: {' '.join(expected)}", f"agrees: {str(rep.agrees).lower()}"]
    status = "pass" if rep.agrees else "fail"
    return (_document("roots rational", payload, status), "\n".join(lines),
            EXIT_OK if rep.agrees else EXIT_FAIL)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="chebalg",
        description="Exact Chebyshev polynomial generation, verification and root analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="print the coefficients of T_n, U_n or T*_n")
    g.add_argument("kind", type=_kind, help="T, U or Tstar")
    g.add_argument("n", type=_nonneg)
    g.add_argument("--method", choices=("recurrence", "closed-form"), default="recurrence")
    g.set_defaults(handler=cmd_gen)

    v = sub.add_parser("verify", parents=[common], help="run the exact verification suites")
    v.add_argument("--max-n", type=_positive, default=64)
    v.add_argument("--only", metavar="SUITES",
                   help="comma-separated subset of: " + ", ".join(suites.SUITES))
    v.set_defaults(handler=cmd_verify)

    r = sub.add_parser("roots", help="root isolation and rational roots")
    rsub = r.add_subparsers(dest="roots_command", required=True)
    iso = rsub.add_parser("isolate", parents=[common], help="isolate all real roots")
    iso.add_argument("kind", type=_kind)
    iso.add_argument("n", type=_positive)
    iso.add_argument("--width", type=_dyadic, help="refine to at most this width, e.g. 1/1024")
    iso.set_defaults(handler=cmd_isolate)
    rat = rsub.add_parser("rational", parents=[common], help="rational roots and classification")
    rat.add_argument("kind", type=_kind)
    rat.add_argument("n", type=_positive)
    rat.set_defaults(handler=cmd_rational)
    return parser


def render(doc: dict, plain: str, fmt: str) -> str:
    if fmt == "plain":
        return plain + "\n"
    return json.dumps(doc, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        doc, plain, code = args.handler(args)
    except (UsageError, ChebAlgError) as exc:
        print(f"chebalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(doc, plain, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
