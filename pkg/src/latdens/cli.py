"""Command line front end.

Subcommands: analyze reports density and class for lattice documents,
catalog lists or prints the named lattices, build evaluates a build
expression, verify runs census-wide verification suites.  Environment
variables LATDENS_MAX_N, LATDENS_JOBS, LATDENS_CACHE_DIR and
LATDENS_FORMAT supply defaults for the matching options.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .buildexpr import ExprError, build
from .catalog import CATALOG_HELP, catalog, classify
from .congruence import cd, con_count
from .enumeration import (DEFAULT_MAX_N, verify_counts, verify_freese,
                          verify_jm, verify_lcd, verify_main,
                          verify_width_conjecture)
from .latfile import LatParseError, format_lat, parse_lat
from .lattice import Lattice, LatticeError, TooLarge

_SUITES = {
    "counts": verify_counts,
    "lcd": verify_lcd,
    "jm": verify_jm,
    "main": verify_main,
    "freese": verify_freese,
    "conjecture": verify_width_conjecture,
}


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"latdens: {name} must be an integer, got {raw!r}")


def _env_format() -> str:
    raw = os.environ.get("LATDENS_FORMAT", "text")
    if raw not in ("text", "jsonl"):
        raise SystemExit(
            f"latdens: LATDENS_FORMAT must be text or jsonl, got {raw!r}")
    return raw


def _analysis(lat: Lattice) -> tuple[dict, int | None, str]:
    """The nine analysis record fields, plus display-only extras.

    The record field order is fixed; the class parameter and the /64
    rendering of the density only appear in the human-readable block.
    """
    value = cd(lat)
    label = classify(lat)
    sets = lat.element_sets()
    record = {
        "n": lat.n,
        "covers": [list(pair) for pair in lat.covers],
        "con_count": con_count(lat),
        "cd": value.exact_str(),
        "jir_count": len(sets.jir),
        "mir_count": len(sets.mir),
        "width": lat.width(),
        "label": label.label,
        "expected_cd":
            label.expected_cd.exact_str() if label.expected_cd else None,
    }
    return record, label.parameter, value.over64_str()


def _record_line(rec: dict) -> str:
    covers = ",".join(f"{i}-{j}" for i, j in rec["covers"]) or "-"
    expected = rec["expected_cd"] if rec["expected_cd"] is not None else "-"
    return (f"RECORD n={rec['n']} covers={covers} con={rec['con_count']} "
            f"cd={rec['cd']} jir={rec['jir_count']} mir={rec['mir_count']} "
            f"width={rec['width']} label={rec['label']} expected={expected}")


def _print_block(rec: dict, parameter: int | None, over64: str) -> None:
    covers = " ".join(f"{i}-{j}" for i, j in rec["covers"]) or "-"
    print(f"lattice: {rec['n']} elements, covers {covers}")
    print(f"  congruences  {rec['con_count']}")
    print(f"  density      {rec['cd']} = {over64}")
    print(f"  jir/mir      {rec['jir_count']}/{rec['mir_count']}")
    print(f"  width        {rec['width']}")
    if rec["label"] == "BELOW":
        print("  class        BELOW (density not above 6/64)")
    else:
        extra = f" (parameter {parameter})" if parameter is not None else ""
        print(f"  class        {rec['label']}{extra}, "
              f"class density {rec['expected_cd']}")
    print(_record_line(rec))


def _cmd_analyze(args: argparse.Namespace) -> int:
    first = True
    for path in args.paths or ["-"]:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        rec, parameter, over64 = _analysis(parse_lat(text))
        if args.format == "jsonl":
            print(json.dumps(rec))
        else:
            if not first:
                print()
            _print_block(rec, parameter, over64)
        first = False
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.name is None:
        width = max(len(usage) for usage, _ in CATALOG_HELP)
        for usage, desc in CATALOG_HELP:
            print(f"{usage:<{width}}  {desc}")
        return 0
    lat = catalog(args.name, *args.params)
    label = " ".join([args.name, *map(str, args.params)])
    sys.stdout.write(format_lat(lat, comment=f"latdens catalog {label}"))
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    lat = build(args.expr)
    sys.stdout.write(format_lat(lat, comment=f"latdens build {args.expr}"))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cap = args.max_n
    n = args.n if args.n is not None else min(6, cap)
    if n > cap:
        raise TooLarge(
            f"verify up to size {n} exceeds the limit {cap}; raise --max-n")
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        kwargs = {"max_n": n, "cache_dir": args.cache_dir}
        if name == "main":
            kwargs["jobs"] = args.jobs
        report = _SUITES[name](**kwargs)
        print(report.summary())
        for line in report.failures:
            print(f"  {line}")
        for line in report.notes:
            print(f"  note: {line}")
        ok = ok and report.ok
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latdens",
        description="Congruence densities and structure of small lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "analyze", help="report density and class for lattice documents")
    p.add_argument("paths", nargs="*", metavar="PATH",
                   help="input documents; '-' or no paths reads stdin")
    p.add_argument("--format", choices=("text", "jsonl"),
                   default=_env_format())
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser(
        "catalog", help="list catalog names or print one catalog lattice")
    p.add_argument("name", nargs="?", help="catalog name, e.g. circ")
    p.add_argument("params", nargs="*", type=int,
                   help="integer parameters for the name")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser(
        "build", help="evaluate a build expression and print the lattice")
    p.add_argument("expr", help="for example 'eglue(b4, 0, circ(6, 1), 0)'")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run census verification suites")
    p.add_argument("suite", choices=(*_SUITES, "all"))
    p.add_argument("n", nargs="?", type=int, default=None,
                   help="largest census size to cover (default 6)")
    p.add_argument("--max-n", type=int,
                   default=_env_int("LATDENS_MAX_N", DEFAULT_MAX_N),
                   help="refuse census sizes above this limit")
    p.add_argument("--jobs", type=int, default=_env_int("LATDENS_JOBS", 1),
                   help="worker processes for the main suite")
    p.add_argument("--cache-dir", default=os.environ.get("LATDENS_CACHE_DIR"),
                   help="directory for plain-text census caches")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (LatticeError, LatParseError, ExprError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
