"""Command line entry point.

Exit codes: 0 success, 1 check or expectation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .catalog import (
    ALL_CHECKS,
    DEFAULT_CHECKS,
    CatalogEntry,
    CatalogError,
    bundled_corpus_path,
    dump_catalog,
    parse_catalog,
    run_suite,
)
from .config import CapExceeded, Caps
from .constructions import FAMILIES, FamilySpec, build
from .invariants import invariants_report
from .landau import TABLE_CAP, landau_table, table_csv
from .perm import format_cycles


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _catalog_arg(value: str) -> str:
    return str(bundled_corpus_path()) if value == "corpus" else value


def _checks_arg(value: str) -> tuple[str, ...]:
    names = tuple(x.strip() for x in value.split(",") if x.strip())
    bad = [n for n in names if n not in ALL_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check(s): {', '.join(bad)}")
    return names


def _caps(args) -> Caps:
    return Caps(enumeration_cap=args.enum_cap, coset_cap=args.coset_cap, lattice_cap=args.lattice_cap)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _add_caps(p: argparse.ArgumentParser) -> None:
    defaults = Caps()
    p.add_argument("--enum-cap", type=int, default=defaults.enumeration_cap)
    p.add_argument("--lattice-cap", type=int, default=defaults.lattice_cap)
    p.add_argument("--coset-cap", type=int, default=defaults.coset_cap)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permexp", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="verify the generator bound and related facts on a catalog")
    p.add_argument("catalog", type=_catalog_arg, help="catalog JSON path, or 'corpus' for the bundled one")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", type=_checks_arg, default=DEFAULT_CHECKS,
                   help=f"comma list from {','.join(ALL_CHECKS)} (default: all but dmax)")
    _add_caps(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.add_argument("--allow-skips", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")

    p = sub.add_parser("invariants", help="print invariants for each catalog entry")
    p.add_argument("catalog", type=_catalog_arg)
    _add_caps(p)
    p.add_argument("--out")

    p = sub.add_parser("construct", help="emit a built-in family as a catalog file")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*",
                   help="integers; for direct_product, factor specs such as cyclic:2 symmetric:3")
    p.add_argument("--name")
    p.add_argument("--out")

    p = sub.add_parser("landau", help="emit lcm(1..n) and Landau's g(n) as CSV")
    p.add_argument("--max", type=int, required=True, dest="max_n")
    p.add_argument("--out")
    return parser


def _cmd_check(args) -> int:
    entries = parse_catalog(args.catalog)
    start = time.perf_counter()
    report = run_suite(entries, args.checks, args.seed, _caps(args), jobs=args.jobs)
    elapsed = time.perf_counter() - start
    if args.timing:
        report.wall_time = elapsed
    _write(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    status = report.exit_status(args.allow_skips)
    print(
        f"{len(report.entries)} entries, {report.failure_count} failures, "
        f"{report.skip_count} skips, {elapsed:.1f}s -> exit {status}",
        file=sys.stderr,
    )
    return status


def _cmd_invariants(args) -> int:
    caps = _caps(args)
    out = []
    status = 0
    for e in parse_catalog(args.catalog):
        try:
            out.append({"name": e.name, **invariants_report(e.group(), caps).to_dict()})
        except CapExceeded as exc:
            out.append({"name": e.name, "skipped": str(exc)})
            status = 1
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return status


def _cmd_construct(args) -> int:
    if args.family == "direct_product":
        spec = FamilySpec("direct_product", [], [FamilySpec.parse(t) for t in args.params])
    else:
        try:
            params = [int(x) for x in args.params]
        except ValueError:
            raise CatalogError(f"parameters must be integers: {args.params}") from None
        spec = FamilySpec(args.family, params)
    G = build(spec)
    entry = CatalogEntry(
        name=args.name or spec.label(),
        degree=G.degree,
        generators=[format_cycles(g) for g in G.generators],
        expect={"order": G.order()},
    )
    _write(dump_catalog([entry]), args.out)
    return 0


def _cmd_landau(args) -> int:
    if not 1 <= args.max_n <= TABLE_CAP:
        raise CatalogError(f"--max must be in 1..{TABLE_CAP}")
    _write(table_csv(landau_table(args.max_n)), args.out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {
        "check": _cmd_check,
        "invariants": _cmd_invariants,
        "construct": _cmd_construct,
        "landau": _cmd_landau,
    }[args.command]
    try:
        return handler(args)
    except (CatalogError, ValueError) as exc:
        print(f"permexp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
