"""Command line front end: counting, cross-verification sweeps, listings, rendering.

Exit codes: 0 success (verify: all methods agree), 1 verify disagreement,
2 malformed input, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .errors import (
    BadIndexError,
    CapExceededError,
    NotAdmissibleError,
    ShapeError,
    WrongEndpointsError,
)
from .exact import det_exact
from .gv import enumerate_disjoint_families, gv_endpoints, gv_matrix
from .kreweras import kreweras_count
from .paths import STEP_EAST, STEP_NORTH, LatticePath, count_paths_dp, enumerate_paths
from .shapes import (
    Partition,
    SkewShape,
    format_shape,
    parse_shape,
    partitions_in_box,
    subpartitions,
)
from .tilings import (
    Lozenge,
    enumerate_tilings,
    lattice_path_to_tiling,
    region_from_shape,
    render_svg,
)

DEFAULT_CAP = 1_000_000
CAP_ENV = "SKEWCOUNT_CAP"

# verify runs and reports these, in this order
_METHODS = ("det", "dp", "enum", "tilings", "gv_enum", "gv_det")


def _resolve_cap(args: argparse.Namespace) -> int:
    if args.cap is not None:
        return args.cap
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ShapeError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _count(shape: SkewShape, method: str, cap: int) -> int:
    if method == "det":
        return kreweras_count(shape)
    if method == "dp":
        return count_paths_dp(shape)
    if method == "enum":
        return len(enumerate_paths(shape, cap))
    if method == "tilings":
        return len(enumerate_tilings(region_from_shape(shape), cap))
    if method == "gv":
        return det_exact(gv_matrix(gv_endpoints(shape)))
    raise ValueError(f"unknown method {method!r}")


def cmd_count(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    print(_count(shape, args.method, _resolve_cap(args)))
    return 0


def _verify_one(text: str, cap: int) -> dict:
    shape = parse_shape(text)
    runners = {
        "det": lambda: kreweras_count(shape),
        "dp": lambda: count_paths_dp(shape),
        "enum": lambda: len(enumerate_paths(shape, cap)),
        "tilings": lambda: len(enumerate_tilings(region_from_shape(shape), cap)),
        "gv_enum": lambda: len(enumerate_disjoint_families(gv_endpoints(shape), cap)),
        "gv_det": lambda: det_exact(gv_matrix(gv_endpoints(shape))),
    }
    counts = {}
    elapsed = {}
    for name in _METHODS:
        t0 = time.perf_counter()
        counts[name] = runners[name]()
        elapsed[name] = round((time.perf_counter() - t0) * 1000.0, 3)
    return {
        "shape": format_shape(shape),
        "counts": {k: str(v) for k, v in counts.items()},
        "agree": len(set(counts.values())) == 1,
        "elapsed_ms": elapsed,
    }


def _verify_job(item: tuple[str, int]) -> dict:
    return _verify_one(*item)


def _box_sweep(box_text: str) -> list[str]:
    match = re.fullmatch(r"(\d+)[xX](\d+)", box_text.strip())
    if not match:
        raise ShapeError(f"--box wants AxB, got {box_text!r}")
    rows, cols = int(match.group(1)), int(match.group(2))
    out = []
    for lam in partitions_in_box(rows, cols):
        for mu in subpartitions(lam):
            out.append(format_shape(SkewShape(Partition(lam), Partition(mu))))
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    if args.box and args.shapes:
        raise ShapeError("give either --box or explicit shapes, not both")
    if args.box:
        texts = _box_sweep(args.box)
    elif args.shapes:
        texts = list(args.shapes)
    else:
        raise ShapeError("nothing to verify: give shapes or --box AxB")
    cap = _resolve_cap(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = pool.map(_verify_job, [(t, cap) for t in texts])
            first_bad = _emit_reports(reports)
    else:
        first_bad = _emit_reports(_verify_one(t, cap) for t in texts)
    if first_bad is not None:
        print(
            f"disagreement on {first_bad['shape']}: {first_bad['counts']}",
            file=sys.stderr,
        )
        return 1
    return 0


def _emit_reports(reports) -> dict | None:
    first_bad = None
    for report in reports:
        print(json.dumps(report, sort_keys=True), flush=True)
        if not report["agree"] and first_bad is None:
            first_bad = report
    return first_bad


def _lozenge_text(loz: Lozenge) -> str:
    return f"T{loz.kind}({loz.a},{loz.b})"


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    cap = _resolve_cap(args)
    if args.what == "paths":
        items = enumerate_paths(shape, cap)
        as_text = lambda p: p.steps
        as_json = lambda p: p.to_json()
    elif args.what == "tilings":
        items = enumerate_tilings(region_from_shape(shape), cap)
        as_text = lambda t: " ".join(_lozenge_text(l) for l in t.sorted_lozenges())
        as_json = lambda t: t.to_json()
    else:
        items = enumerate_disjoint_families(gv_endpoints(shape), cap)
        as_text = lambda f: " | ".join(
            f"({p.start[0]},{p.start[1]}):{p.steps}" for p in f.paths
        )
        as_json = lambda f: f.to_json()
    shown = items if args.limit is None else items[: args.limit]
    for item in shown:
        if args.fmt == "json":
            print(json.dumps(as_json(item), sort_keys=True))
        else:
            print(as_text(item))
    if len(shown) < len(items):
        if args.fmt == "json":
            print(json.dumps({"truncated": True, "shown": len(shown), "total": len(items)}))
        else:
            print(f"... truncated: showing {len(shown)} of {len(items)}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    region = region_from_shape(shape)
    if args.tiling is not None:
        tilings = enumerate_tilings(region, _resolve_cap(args))
        if not 0 <= args.tiling < len(tilings):
            raise BadIndexError(
                f"tiling index {args.tiling} outside 0..{len(tilings) - 1}"
            )
        tiling = tilings[args.tiling]
    else:
        bad = set(args.path) - {STEP_EAST, STEP_NORTH}
        if bad:
            raise ShapeError(f"path steps must be E or N, got {sorted(bad)}")
        tiling = lattice_path_to_tiling(shape, LatticePath((0, 0), args.path))
    svg = render_svg(region, tiling, args.shade)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def _add_cap(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--cap",
        type=int,
        default=None,
        metavar="N",
        help=f"enumeration item cap (default {DEFAULT_CAP}, or ${CAP_ENV})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcount",
        description="Count monotone lattice paths in a skew shape by several "
        "mutually independent methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the path count of one shape")
    p.add_argument("shape", help='shape text, e.g. "9,7,6,2/3,1"')
    p.add_argument(
        "--method",
        choices=("det", "dp", "enum", "tilings", "gv"),
        default="det",
        help="counting method (default det)",
    )
    _add_cap(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser(
        "verify",
        help="run every method and report agreement, one JSON line per shape",
    )
    p.add_argument("shapes", nargs="*", help="explicit shape texts")
    p.add_argument(
        "--box",
        metavar="AxB",
        help="sweep every outer shape in an AxB box with every contained inner one",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    _add_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list paths, tilings, or disjoint families")
    p.add_argument("shape")
    p.add_argument("what", choices=("paths", "tilings", "families"))
    p.add_argument("--limit", type=int, default=None, metavar="K",
                   help="show at most K items, with a truncation marker")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    _add_cap(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="write an SVG of a tiling of the shape's region")
    p.add_argument("shape")
    pick = p.add_mutually_exclusive_group(required=True)
    pick.add_argument("--tiling", type=int, metavar="INDEX",
                      help="index into the canonical tiling order")
    pick.add_argument("--path", metavar="STEPS",
                      help="admissible path whose induced tiling to draw")
    p.add_argument("--shade", choices=("a", "b", "both"), default="both")
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    _add_cap(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ShapeError, BadIndexError, NotAdmissibleError, WrongEndpointsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
