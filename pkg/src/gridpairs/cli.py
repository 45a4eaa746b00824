"""Command-line front end.

Every subcommand is a thin adapter around one library call: it parses a
document from --input (default stdin), applies the operation, and writes
the result to --output (default stdout) in the requested format.  Exit
codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import formats
from .formats import ParseError
from .gridset import GridSet, Window
from .layers import trace
from .lifted import lift_interpolate, lift_restrict
from .oracle import random_set
from .pairs import BoundaryPair, InvalidPairError, reconstruct, validate
from .transfer import GridRatio, interpolate, restrict

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _expect_gridset(doc) -> GridSet:
    if not isinstance(doc, GridSet):
        raise ValueError("this command expects a grid set document")
    return doc


def _expect_pair(doc) -> BoundaryPair:
    if not isinstance(doc, BoundaryPair):
        raise ValueError("this command expects a grid pair document")
    return doc


def _parse_window(spec: str) -> Window:
    try:
        low, high = spec.split(":")
        lower = tuple(int(c) for c in low.split(","))
        upper = tuple(int(c) for c in high.split(","))
    except ValueError:
        raise ValueError(
            f"window {spec!r} is not of the form x0,y0,...:x1,y1,...")
    return Window(lower, upper)


def render_text(doc, unit: Optional[int] = None) -> str:
    """Goboard rendering with one character per `unit` fine units.

    The default unit is the document's spacing; unit 1 shows the
    sub-grid positions between coarse points, as the figures do.
    """
    if doc.dim != 2:
        raise ValueError("rendering is 2-D only")
    unit = doc.spacing if unit is None else unit
    if unit < 1 or doc.spacing % unit:
        raise ValueError(f"unit {unit} must divide the spacing {doc.spacing}")
    if isinstance(doc, GridSet):
        layers_ = [("0", doc.points)]
        label = "excluded" if doc.mode.value == "cofinite" else None
    else:
        layers_ = [("0", doc.d0), ("1", doc.d1)]
        label = None
    everything = set()
    for _, pts in layers_:
        everything |= pts
    if not everything:
        return "(no points to draw)\n"
    xs = [p[0] for p in everything]
    ys = [p[1] for p in everything]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    width = (x1 - x0) // unit + 1
    grid = []
    for y in range(y0, y1 + 1, unit):
        row = ["-"] * width
        grid.append(row)
    symbol = {}
    for ch, pts in layers_:
        for p in pts:
            symbol[p] = ch
    for p, ch in symbol.items():
        grid[(p[1] - y0) // unit][(p[0] - x0) // unit] = ch
    lines = ["".join(row) for row in grid]
    if label:
        lines.append(f"(marks show {label} points)")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridpairs",
        description="Digital images on integer lattices: boundary pairs "
                    "and multiresolution transfer.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, ratio=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("-i", "--input", default=None,
                         help="input file (default: stdin)")
        cmd.add_argument("-o", "--output", default=None,
                         help="output file (default: stdout)")
        cmd.add_argument("--format", choices=formats.FORMATS,
                         default=formats.ASCII,
                         help="output format (default: ascii)")
        if ratio:
            cmd.add_argument("--ratio", type=int, required=True,
                             help="coarse-to-fine grid ratio (n >= 2)")
        return cmd

    add("trace", "boundary pair of a grid set")
    add("reconstruct", "grid set behind a boundary pair")
    add("validate", "check the boundary-pair axioms")
    add("restrict", "project a fine grid set to the coarse grid", ratio=True)
    add("interpolate", "refine a coarse grid set to the fine grid", ratio=True)
    add("lift-restrict", "project a fine boundary pair to the coarse grid",
        ratio=True)
    add("lift-interpolate", "refine a coarse boundary pair to the fine grid",
        ratio=True)

    render_cmd = sub.add_parser("render", help="pretty goboard view")
    render_cmd.add_argument("-i", "--input", default=None)
    render_cmd.add_argument("-o", "--output", default=None)
    render_cmd.add_argument("--unit", type=int, default=None,
                            help="fine units per character "
                                 "(default: the grid spacing)")

    random_cmd = sub.add_parser("random", help="draw a random grid set")
    random_cmd.add_argument("-o", "--output", default=None)
    random_cmd.add_argument("--format", choices=formats.FORMATS,
                            default=formats.ASCII)
    random_cmd.add_argument("--window", required=True,
                            help="inclusive box, e.g. 0,0:15,15")
    random_cmd.add_argument("--density", type=float, required=True)
    random_cmd.add_argument("--seed", type=int, required=True)
    random_cmd.add_argument("--spacing", type=int, default=1)
    return parser


def _run(args: argparse.Namespace) -> int:
    command = args.command

    if command == "random":
        window = _parse_window(args.window)
        result = random_set(window, args.density, args.seed, args.spacing)
        _write(args.output, formats.serialize(result, args.format))
        return EXIT_OK

    doc = formats.parse_text(_read(args.input))

    if command == "render":
        _write(args.output, render_text(doc, args.unit))
        return EXIT_OK

    if command == "validate":
        report = validate(_expect_pair(doc))
        verdict = "valid" if report.valid else "INVALID"
        _write(args.output, report.describe() + f"\nresult: {verdict}\n")
        return EXIT_OK if report.valid else EXIT_INVALID

    if command == "trace":
        result = trace(_expect_gridset(doc))
    elif command == "reconstruct":
        result = reconstruct(_expect_pair(doc))
    elif command == "restrict":
        result = restrict(_expect_gridset(doc), GridRatio(args.ratio))
    elif command == "interpolate":
        result = interpolate(_expect_gridset(doc), GridRatio(args.ratio))
    elif command == "lift-restrict":
        result = lift_restrict(_expect_pair(doc), GridRatio(args.ratio))
    elif command == "lift-interpolate":
        result = lift_interpolate(_expect_pair(doc), GridRatio(args.ratio))
    else:  # pragma: no cover - argparse enforces the choices
        raise ValueError(f"unknown command {command!r}")

    _write(args.output, formats.serialize(result, args.format))
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidPairError as exc:
        print(f"invalid boundary pair:\n{exc.report.describe()}",
              file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
