"""Command line interface.

Machine-readable results go to stdout, diagnostics to stderr. Exit codes:
0 success (certified / agreement), 1 refuted or disagreement, 2 ambiguous
or indeterminate, 3 input or validation error. A file argument of '-' reads
from stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .analysis import (
    CertStatus,
    brute_force_ymmst,
    certify_width_lower_bound,
    gen_star_pointset,
    verify_ymmst_drawing,
)
from .bench import FAMILIES, render_plot, run_bench, write_csv
from .drawing import RootedTree, draw_tree, resolve_coordinates
from .errors import YmmstError
from .formats import (
    emit_drawing,
    emit_points,
    parse_drawing,
    parse_points,
    parse_tree,
)
from .mmst import build_ymmst
from .svg import emit_svg

_EXIT_BY_STATUS = {
    CertStatus.CERTIFIED: 0,
    CertStatus.REFUTED: 1,
    CertStatus.AMBIGUOUS: 2,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _approx(value: int) -> str:
    """Short human-readable magnitude for stderr diagnostics."""
    if value < 10**12:
        return str(value)
    return f"~2^{value.bit_length() - 1}"


def _point_pair(p) -> list[str]:
    return [str(p.x), str(p.y)]


def _cmd_draw(args) -> int:
    tree = parse_tree(_read(args.tree_file))
    drawn = draw_tree(tree)
    resolved = resolve_coordinates(drawn)
    _write_out(emit_drawing(resolved), args.output)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as f:
            f.write(emit_svg(resolved))
    print(
        f"drew {tree.n} vertices on a grid of width {_approx(drawn.width)} "
        f"and height {_approx(drawn.height)}",
        file=sys.stderr,
    )
    return 0


def _cmd_mmst(args) -> int:
    P = parse_points(_read(args.points_file))
    tree = build_ymmst(P)
    _write_out(emit_drawing(tree), args.output)
    if not tree.uniqueness_flag:
        print(
            "warning: nearest-below ties were broken by index; "
            "the tree is ambiguous and will not certify",
            file=sys.stderr,
        )
    return 0


def _cmd_verify(args) -> int:
    G = parse_drawing(_read(args.drawing_file))
    cert = verify_ymmst_drawing(G)
    doc = {
        "status": cert.status.value,
        "uniqueness": cert.uniqueness,
        "violations": [
            {"vertex": v.vertex, "witness": v.witness, "reason": v.reason}
            for v in cert.violations
        ],
    }
    print(json.dumps(doc, indent=2))
    return _EXIT_BY_STATUS[cert.status]


def _cmd_oracle(args) -> int:
    P = parse_points(_read(args.points_file))
    bits = args.precision_bits
    if bits is None:
        raw = os.environ.get("YMMST_PRECISION_BITS", "128")
        try:
            bits = int(raw)
        except ValueError as e:
            raise YmmstError(
                f"YMMST_PRECISION_BITS must be an integer, got {raw!r}"
            ) from e
        if bits < 1:
            raise YmmstError(f"YMMST_PRECISION_BITS must be positive, got {bits}")
    built = build_ymmst(P)
    result = brute_force_ymmst(P, precision_bits=bits, max_n=args.max_n)
    agree = built.parent == result.tree.parent
    doc = {
        "n": len(P),
        "agree": agree,
        "indeterminate": result.indeterminate,
        "builder_edges": built.edges(),
        "oracle_edges": result.tree.edges(),
        "total": result.total_decimal(),
        "margin_ulps": result.margin_scaled,
        "error_bound_ulps": result.error_bound_scaled,
        "precision_bits": result.precision_bits,
    }
    print(json.dumps(doc, indent=2))
    if result.indeterminate:
        return 2
    return 0 if agree else 1


def _cmd_star(args) -> int:
    if args.draw:
        resolved = resolve_coordinates(draw_tree(RootedTree.star(args.m)))
        sys.stdout.write(emit_drawing(resolved))
    else:
        sys.stdout.write(emit_points(gen_star_pointset(args.m)))
    return 0


def _cmd_widthbound(args) -> int:
    G = parse_drawing(_read(args.drawing_file))
    report = certify_width_lower_bound(G)
    doc = {
        "quadrant": report.quadrant,
        "chain_length": len(report.chain),
        "chain": [_point_pair(p) for p in report.chain],
        "translated_chain": [_point_pair(p) for p in report.translated_chain],
        "doubling_holds": report.doubling_holds,
        "certified_width_lower_bound": str(report.certified_width_lower_bound),
        "predicted_width_lower_bound": str(report.predicted_width_lower_bound),
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_bench(args) -> int:
    rows = run_bench(args.family, args.max_size, seed=args.seed)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            write_csv(rows, f)
        print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    else:
        write_csv(rows, sys.stdout)
    if args.plot:
        render_plot(rows, args.plot)
        print(f"rendered figure to {args.plot}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ymmst",
        description=(
            "Rooted y-monotone minimum spanning trees: build them from point "
            "sets, draw arbitrary trees so they become one, verify claimed "
            "drawings, and certify width lower bounds."
        ),
    )
    parser.add_argument("--version", action="version", version=f"ymmst {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("draw", help="draw a tree file as a certified grid drawing")
    p.add_argument("tree_file", help="edge-list tree file, or - for stdin")
    p.add_argument("-o", "--output", default=None, help="drawing JSON path (default stdout)")
    p.add_argument("--svg", default=None, help="also render an SVG picture to this path")
    p.set_defaults(func=_cmd_draw)

    p = sub.add_parser("mmst", help="build the y-MMST of a point set")
    p.add_argument("points_file", help="point set file, or - for stdin")
    p.add_argument("-o", "--output", default=None, help="drawing JSON path (default stdout)")
    p.set_defaults(func=_cmd_mmst)

    p = sub.add_parser("verify", help="certify or refute a drawing (exit 0/1/2)")
    p.add_argument("drawing_file", help="drawing JSON path, or - for stdin")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="cross-check the builder by brute force")
    p.add_argument("points_file", help="point set file, or - for stdin")
    p.add_argument(
        "--precision-bits",
        type=_positive_int,
        default=None,
        help="fixed-point bits for length sums (default: $YMMST_PRECISION_BITS or 128)",
    )
    p.add_argument(
        "--max-n", type=_positive_int, default=10, help="refusal cap on instance size"
    )
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("star", help="emit a degree-m star witness")
    p.add_argument("m", type=_positive_int, help="number of leaves")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--points",
        action="store_true",
        help="emit the point set whose y-MMST is the star (default)",
    )
    group.add_argument(
        "--draw", action="store_true", help="emit the drawn star as drawing JSON"
    )
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("widthbound", help="certify a width lower bound for a star drawing")
    p.add_argument("drawing_file", help="drawing JSON path, or - for stdin")
    p.set_defaults(func=_cmd_widthbound)

    p = sub.add_parser("bench", help="sweep a tree family, emit CSV and figures")
    p.add_argument("--family", choices=FAMILIES, default="star")
    p.add_argument("--max-size", type=_positive_int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None, help="CSV output path (default stdout)")
    p.add_argument("--plot", default=None, help="figure output path (png/pdf/svg)")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except YmmstError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
