"""Command-line front end.

Subcommands: analyze, power, compound, enumerate4, products,
gerschgorin, catalog.  Markdown is the default output; --json switches
to a deterministic JSON report (stable key order, 6-significant-digit
floats).  Exit codes: 0 success, 2 input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import dataclass

from . import census as census_mod
from . import render
from .catalog import catalog, catalog_entry, catalog_names, compound, products_suite
from .census import CalibrationError, get_census, onev_census
from .classify import ClassificationFlags, classify
from .core import IntSquare, ParseError, SquareError, identity, parse_square
from .powering import DEFAULT_MAX_P, PowerTrajectory, trajectory
from .spectra import (
    ConvergenceError,
    SpectralSummary,
    gerschgorin_disks,
    spectral_summary,
    zero_multiplicity,
)
from .structure import JordanZeroProfile, zero_jordan_profile

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


@dataclass(frozen=True)
class Report:
    subject: str
    classification: ClassificationFlags
    spectra: SpectralSummary
    jordan: JordanZeroProfile
    trajectory: PowerTrajectory | None


def resolve_input(spec: str) -> tuple[str, IntSquare]:
    """A catalog name, an identityN convenience name, or a file path."""
    if spec in catalog_names():
        return spec, catalog(spec)
    m = re.fullmatch(r"identity(\d+)", spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("identity order must be >= 1")
        return spec, identity(n)
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {spec!r}: {exc}") from exc
    return spec, parse_square(text)


def build_report(name: str, a: IntSquare, max_p: int) -> Report:
    return Report(
        subject=name,
        classification=classify(a),
        spectra=spectral_summary(a),
        jordan=zero_jordan_profile(a),
        trajectory=trajectory(a, max_p),
    )


def report_json(report: Report) -> dict:
    return {
        "subject": report.subject,
        "classification": render.flags_json(report.classification),
        "spectra": render.spectra_json(report.spectra),
        "jordan": render.jordan_json(report.jordan),
        "trajectory": render.trajectory_json(report.trajectory)
        if report.trajectory is not None
        else None,
    }


def report_markdown(report: Report) -> str:
    parts = [f"# analysis: {report.subject}\n"]
    parts.append("## classification\n")
    parts.append(render.classification_markdown(report.classification))
    parts.append("\n## spectra\n")
    parts.append(render.spectra_markdown(report.spectra))
    parts.append("\n## jordan structure (eigenvalue 0)\n")
    parts.append(render.jordan_markdown(report.jordan))
    if report.trajectory is not None:
        parts.append("\n## power trajectory\n")
        parts.append(
            render.trajectory_markdown(report.trajectory, report.classification)
        )
    return "".join(parts)


def _emit_json(tree) -> None:
    print(json.dumps(tree, indent=2))


def cmd_analyze(args) -> int:
    name, a = resolve_input(args.input)
    report = build_report(name, a, args.max_p)
    if args.json:
        _emit_json(report_json(report))
    else:
        print(report_markdown(report), end="")
    return EXIT_OK


def cmd_power(args) -> int:
    name, a = resolve_input(args.input)
    t = trajectory(a, args.max_p)
    flags = classify(a)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render.curves_svg(t))
    if args.json:
        tree = {"subject": name, "trajectory": render.trajectory_json(t)}
        _emit_json(tree)
    else:
        print(f"# power trajectory: {name}\n")
        print(render.trajectory_markdown(t, flags), end="")
        if t.constancy_onset is not None:
            last = t.steps[-1]
            print(f"\nconstant: {last.constant_value} E{a.order} at p={t.constancy_onset}")
    return EXIT_OK


def cmd_gerschgorin(args) -> int:
    name, a = resolve_input(args.input)
    disks = gerschgorin_disks(a, args.axis)
    roots, remainder = render.exact_eigenvalues(spectral_summary(a).char_poly)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render.gerschgorin_svg(disks, roots))
    if args.json:
        _emit_json(
            {
                "subject": name,
                "axis": args.axis,
                "disks": [{"center": d.center, "radius": d.radius} for d in disks],
                "exact_eigenvalues": roots,
                "unfactored": remainder.pretty() if remainder else None,
            }
        )
    else:
        print(render.disks_markdown(disks), end="")
    return EXIT_OK


def cmd_compound(args) -> int:
    pname, pattern = resolve_input(args.pattern)
    bname, base = resolve_input(args.base)
    result = compound(pattern, base, args.kind)
    if args.json:
        _emit_json(
            {
                "pattern": pname,
                "base": bname,
                "kind": args.kind,
                "square": render.square_json(result),
            }
        )
    else:
        print(result)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name:
        entry = catalog_entry(args.name)
        if args.json:
            _emit_json(
                {
                    "name": entry.name,
                    "provenance": entry.provenance,
                    "square": render.square_json(entry.square),
                }
            )
        else:
            print(entry.square)
        return EXIT_OK
    if args.json:
        _emit_json(
            [
                {"name": e, "provenance": catalog_entry(e).provenance}
                for e in catalog_names()
            ]
        )
    else:
        for name in catalog_names():
            print(f"{name:8s} {catalog_entry(name).provenance}")
    return EXIT_OK


def _census_warn(census) -> None:
    if not census.calibrated:
        print(
            "warning: census ordering failed calibration against the anchor "
            f"squares (got {census.anchor_report}); index-based features are "
            "unreliable and fall back to square-by-square comparison.",
            file=sys.stderr,
        )


def cmd_enumerate4(args) -> int:
    census = get_census()
    _census_warn(census)
    clan_ids = census.clan_id_map()
    if args.census:
        with open(args.census, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            header = ["index"] + [f"c{k}" for k in range(16)] + [
                "associative",
                "pandiagonal",
                "ultramagic",
                "mu",
                "one_ev",
                "r_index",
                "clan",
            ]
            writer.writerow(header)
            from .spectra import r_index, sv_squared_charpoly
            from .core import char_poly

            for i, sq in enumerate(census.canonical_squares, start=1):
                flags = classify(sq)
                key = sv_squared_charpoly(sq).coefficients
                writer.writerow(
                    [i]
                    + list(sq.entries)
                    + [
                        int(flags.is_associative),
                        int(flags.is_pandiagonal),
                        int(flags.is_ultramagic),
                        zero_multiplicity(char_poly(sq)),
                        int((i, r_index(sq)) in census.onev_members),
                        r_index(sq),
                        clan_ids[key],
                    ]
                )
    if args.find_1ev:
        members = onev_census(census, associative_only=args.associative_only)
        if args.json:
            _emit_json(
                [
                    {
                        "index": idx,
                        "r_index": r_val,
                        "clan": clan_ids[key],
                        "associative": classify(census.square(idx)).is_associative,
                    }
                    for idx, r_val, key in members
                ]
            )
        else:
            print("| index | R | clan | associative |")
            print("|-------|---|------|-------------|")
            for idx, r_val, key in members:
                assoc = classify(census.square(idx)).is_associative
                print(f"| {idx} | {r_val} | {clan_ids[key]} | {str(assoc).lower()} |")
        return EXIT_OK
    summary = {
        "count": len(census.canonical_squares),
        "raw_count": census.raw_count,
        "clans": len(census.clans),
        "associative": sum(
            1 for sq in census.canonical_squares if classify(sq).is_associative
        ),
        "one_ev_members": len(census.onev_members),
        "calibrated": census.calibrated,
        "anchors": census.anchor_report,
        "kernel": census_mod.KERNEL_NAME,
    }
    if args.json:
        _emit_json(summary)
    else:
        for key, value in summary.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_products(args) -> int:
    census = get_census()
    _census_warn(census)
    try:
        suite = products_suite()
    except CalibrationError as exc:
        print(f"products suite unavailable: {exc}", file=sys.stderr)
        return EXIT_OK
    if args.json:
        tree = {
            section: {
                name: {
                    key: (render.charpoly_json(val) if key == "char_poly" else val)
                    for key, val in info.items()
                }
                for name, info in entries.items()
            }
            for section, entries in suite.items()
        }
        _emit_json(tree)
        return EXIT_OK
    for section, entries in suite.items():
        print(f"## {section}")
        for name, info in entries.items():
            bits = []
            for key, val in info.items():
                if key == "char_poly":
                    bits.append(f"char_poly: {val.pretty()}")
                else:
                    bits.append(f"{key}: {val}")
            print(f"- {name}: " + "; ".join(bits))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dasq",
        description="Exact analysis of doubly-affine integer squares "
        "(Latin, semimagic and magic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format_flags(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument(
            "--md", action="store_true", help="markdown output (default)"
        )

    p = sub.add_parser("analyze", help="full report for one square")
    p.add_argument("input", help="catalog name or matrix file")
    p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P)
    add_format_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("power", help="power trajectory table")
    p.add_argument("input")
    p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P)
    p.add_argument("--svg", metavar="PATH", help="write C%%/Spread curves")
    add_format_flags(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("gerschgorin", help="Gerschgorin disks")
    p.add_argument("input")
    p.add_argument("--axis", choices=["row", "column"], default="column")
    p.add_argument("--svg", metavar="PATH", help="write disk plot")
    add_format_flags(p)
    p.set_defaults(func=cmd_gerschgorin)

    p = sub.add_parser("compound", help="compound two squares")
    p.add_argument("pattern", help="pattern square (catalog name or file)")
    p.add_argument("base", help="base square (catalog name or file)")
    p.add_argument("--kind", choices=["latin", "magic"], required=True)
    add_format_flags(p)
    p.set_defaults(func=cmd_compound)

    p = sub.add_parser("enumerate4", help="order-4 classic magic census")
    p.add_argument("--census", metavar="PATH", help="write the census CSV")
    p.add_argument("--find-1ev", action="store_true", help="list 1EV members")
    p.add_argument(
        "--associative-only", action="store_true", help="restrict --find-1ev"
    )
    add_format_flags(p)
    p.set_defaults(func=cmd_enumerate4)

    p = sub.add_parser("products", help="pair/triple products and commutators")
    add_format_flags(p)
    p.set_defaults(func=cmd_products)

    p = sub.add_parser("catalog", help="built-in squares")
    p.add_argument("name", nargs="?", help="print this square")
    p.add_argument("--list", action="store_true", help="list names (default)")
    add_format_flags(p)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SquareError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
