"""Command-line front end: ``tljw <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import DiagramError, check_flavor, parse_diagram, to_path
from .paths import DottedPath, DyckPath, PathError, parse_dots
from .projector import COEFF_CACHE, ElementError, coeff_recursive, jw
from .report import Report
from .scalar import Scalar, ScalarError
from .suites import SUITES, reproduce, run_suite
from .tiling import enumerate_tilings, gf, tiling_tikz, tiling_weight, tilings_json, admissible

CACHE_ENV = "TLJW_CACHE_DIR"

# largest n computed without --force; product cost grows with the basis size squared
PROJECT_LIMIT = {"A": 9, "B": 6}
VERIFY_LIMIT = {"A": 8, "B": 5}


class UsageError(Exception):
    pass


def _guard(flavor: str, n: int, limits: dict, force: bool, what: str) -> None:
    limit = limits[flavor]
    if n <= limit:
        return
    if not force:
        raise UsageError(f"{what} with n={n} exceeds the type-{flavor} limit {limit}; pass --force to run anyway")
    print(f"warning: {what} with n={n} is above the type-{flavor} limit {limit}; "
          "cost grows roughly with the square of the number of basis diagrams", file=sys.stderr)


def _scalar_out(value: Scalar, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(value.to_json(), sort_keys=True)
    return value.format(latex=fmt == "latex")


def _report_out(report: Report, fmt: str, timing: bool) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(timing), indent=2, sort_keys=True)
    return report.format_text()


def _dotted_path(args) -> DottedPath:
    if args.path is None:
        raise UsageError("--path is required")
    dots = parse_dots(args.dots) if args.dots else ()
    if dots and args.flavor == "A":
        raise UsageError("--dots only makes sense with --flavor B")
    return DottedPath(DyckPath(args.path), dots)


def cmd_project(args) -> tuple[str, bool]:
    if args.n is None:
        raise UsageError("--n is required")
    _guard(args.flavor, args.n, PROJECT_LIMIT, args.force, "projection")
    e = jw(args.flavor, args.n, args.method or "wenzl")
    if args.format == "json":
        return json.dumps(e.to_json(), indent=2, sort_keys=True), True
    if args.format == "latex":
        return e.to_latex(), True
    return e.format_text(), True


def cmd_coeff(args) -> tuple[str, bool]:
    if args.diagram is None:
        raise UsageError("--diagram is required")
    d = parse_diagram(args.diagram, args.n)
    method = args.method or "recursive"
    if method == "recursive":
        value = coeff_recursive(args.flavor, d)
    elif method == "tiling":
        value = gf(args.flavor, to_path(d))
    elif method == "full":
        _guard(args.flavor, d.n, PROJECT_LIMIT, args.force, "projection")
        value = jw(args.flavor, d.n, "wenzl").coeff(d)
    else:
        raise UsageError(f"coeff takes --method recursive|tiling|full, not {method!r}")
    return _scalar_out(value, args.format), True


def cmd_gf(args) -> tuple[str, bool]:
    return _scalar_out(gf(args.flavor, _dotted_path(args)), args.format), True


def cmd_tilings(args) -> tuple[str, bool]:
    p = _dotted_path(args)
    if args.format == "json":
        return json.dumps(tilings_json(p, args.flavor), indent=2, sort_keys=True), True
    tilings = enumerate_tilings(p.path)
    if args.format in ("tikz", "latex"):
        return "\n\n".join(tiling_tikz(t) for t in tilings), True
    lines = [f"{len(tilings)} tilings above {p}"]
    for t in tilings:
        tiles = " ".join(f"{tile.h}@{tile.start_x}:{tile.profile or '.'}" for tile in t.tiles)
        mark = "" if not p.dotted else ("  admissible" if admissible(t, p.dotted) else "  excluded")
        lines.append(f"  {tiles}  weight {tiling_weight(t, args.flavor)}{mark}")
    return "\n".join(lines), True


def cmd_verify(args) -> tuple[str, bool]:
    max_n = 1 if args.max_n is None else args.max_n
    if max_n < 0:
        raise UsageError("--max-n must be non-negative")
    _guard(args.flavor, max_n, VERIFY_LIMIT, args.force, "verification")
    report = run_suite(args.flavor, max_n, args.suite)
    return _report_out(report, args.format, args.timing), report.passed


def cmd_reproduce(args) -> tuple[str, bool]:
    report = reproduce()
    return _report_out(report, args.format, args.timing), report.passed


COMMANDS = {
    "project": cmd_project,
    "coeff": cmd_coeff,
    "gf": cmd_gf,
    "tilings": cmd_tilings,
    "verify": cmd_verify,
    "reproduce-paper": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tljw", description="Exact Jones-Wenzl projections and Dyck tilings.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, formats=("json", "latex", "text"), default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--force", action="store_true", help="allow sizes above the guard rails")

    def flavor(p):
        p.add_argument("--flavor", choices=("A", "B"), default="A")

    p = sub.add_parser("project", help="full projection P(n) or Q(n)")
    flavor(p)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("wenzl", "morrison"))
    common(p)

    p = sub.add_parser("coeff", help="coefficient of one diagram")
    flavor(p)
    p.add_argument("--diagram", help='arcs in folded form, e.g. "(1,2)(3,6)*(4,5)(7,8)"')
    p.add_argument("--n", type=int, help="strand count (inferred from the diagram by default)")
    p.add_argument("--method", choices=("recursive", "tiling", "full"))
    common(p)

    for verb, text in (("gf", "tiling generating function of a path"), ("tilings", "list the tilings of a path")):
        p = sub.add_parser(verb, help=text)
        flavor(p)
        p.add_argument("--path", help="Dyck word in U and R")
        p.add_argument("--dots", help='dotted pairs, e.g. "3-6,1-2"')
        formats = ("json", "latex", "text", "tikz") if verb == "tilings" else ("json", "latex", "text")
        common(p, formats)

    p = sub.add_parser("verify", help="run invariant suites up to --max-n")
    flavor(p)
    p.add_argument("--max-n", type=int)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--timing", action="store_true", help="include wall times (output is then not reproducible)")
    common(p, ("json", "text"))

    p = sub.add_parser("reproduce-paper", help="check every worked value against its target")
    p.add_argument("--timing", action="store_true", help="include wall times (output is then not reproducible)")
    common(p, ("json", "text"))
    return parser


def _load_cache() -> str | None:
    directory = os.environ.get(CACHE_ENV)
    if directory and os.path.isdir(directory):
        COEFF_CACHE.load(directory)
    return directory


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "flavor"):
        check_flavor(args.flavor)
    cache_dir = _load_cache()
    try:
        text, ok = COMMANDS[args.verb](args)
    except (UsageError, DiagramError, PathError, ElementError, ScalarError, ValueError) as exc:
        print(f"tljw {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        COEFF_CACHE.save(cache_dir)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
