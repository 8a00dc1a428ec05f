"""Command-line interface: analyze, curves, genus3d, gen, bench.

Exit codes: 0 success, 1 input or validity error, 2 formula/oracle
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import corners, curves, gen, grid, holes, solid3d
from .errors import HolecountError, ParseError
from .labeling import label_mask

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREEMENT = 2


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _parse_grid(data: bytes, fmt: str | None) -> grid.BinaryGrid:
    if fmt is None:
        fmt = "pbm" if data.lstrip().startswith(b"P1") else "ascii01"
    return grid.parse_image(data, "pbm_p1" if fmt == "pbm" else "ascii01")


def render_annotations(g: grid.BinaryGrid, reports) -> str:
    """Digit overlay in the style of the worked example: 2/4 corner classes,
    1 for other component points, 0 for background."""
    canvas = [["0"] * g.width for _ in range(g.height)]
    for r in range(g.height):
        for c in range(g.width):
            if g.cells[r, c]:
                canvas[r][c] = "1"
    for rep in reports:
        for (r, c), k in rep.classification.classes.items():
            if k in (2, 4):
                canvas[r][c] = str(k)
    return "\n".join("".join(row) for row in canvas)


def cmd_analyze(args) -> int:
    try:
        g = _parse_grid(_read_input(args.input), args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    reports = holes.analyze_image(
        g, run_oracle=args.oracle == "on", run_validation=args.validate == "on"
    )
    if args.output == "json":
        print(json.dumps([rep.to_dict() for rep in reports], indent=2))
    else:
        print(render_annotations(g, reports))
        for rep in reports:
            d = rep.to_dict()
            print(
                f"component {d['component_id']}: area={d['area']} "
                f"c2={d['c2']} c3={d['c3']} c4={d['c4']} "
                f"holes_formula={d['holes_formula']} "
                f"holes_oracle={d['holes_oracle']} valid={d['valid']} "
                f"agreement={d['agreement']}"
            )
    if any(rep.agreement is False for rep in reports):
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_curves(args) -> int:
    try:
        g = _parse_grid(_read_input(args.input), args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    from .labeling import label_components

    labels = label_components(g, "foreground")
    out = []
    for cid in range(1, labels.component_count + 1):
        mask = labels.mask_of(cid)
        validity = corners.validate_component(g, mask)
        if not validity.valid:
            for kind, p in validity.reasons:
                print(f"component {cid} invalid: {kind} at {p}", file=sys.stderr)
            return EXIT_INPUT
        contours = curves.trace_contours(g, mask)
        acct = curves.second_proof_accounting(g, mask)
        entry = {
            "component_id": cid,
            "contours": [],
            "accounting": {"lhs": acct.lhs, "rhs": acct.rhs, "holds": acct.holds},
        }
        for ct, cc in zip(contours, acct.curve_censuses):
            if ct.kind == curves.OUTER:
                lemma = cc.cp2 - cc.cp4 == 4
            else:
                lemma = cc.cp4 - cc.cp2 == 4
            entry["contours"].append(
                {
                    "kind": ct.kind,
                    "points": [list(p) for p in ct.points],
                    "cp2": cc.cp2,
                    "cp3": cc.cp3,
                    "cp4": cc.cp4,
                    "lemma_holds": lemma,
                }
            )
        out.append(entry)
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_genus3d(args) -> int:
    try:
        g = _parse_grid(_read_input(args.input), args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    from .labeling import label_components

    labels = label_components(g, "foreground")
    out = []
    for cid in range(1, labels.component_count + 1):
        mask = labels.mask_of(cid)
        validity = corners.validate_component(g, mask)
        if not validity.valid:
            for kind, p in validity.reasons:
                print(f"component {cid} invalid: {kind} at {p}", file=sys.stderr)
            return EXIT_INPUT
        census2d = corners.classify_corners(g, mask).census
        try:
            solid = solid3d.double_component(g, mask)
            sc = solid3d.extract_surface(solid)
            census = solid3d.classify_surface_points(sc)
            g_formula = solid3d.genus_by_formula(census)
            g_euler = solid3d.euler_genus_oracle(sc)
        except HolecountError as exc:
            print(f"component {cid}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        h_formula = holes.holes_by_formula(census2d)
        checks = {
            "m6_zero": census.m6 == 0,
            "m3_eq_2c2": census.m3 == 2 * census2d.c2,
            "m5_eq_2c4": census.m5 == 2 * census2d.c4,
            "genus_eq_holes": g_formula == h_formula,
            "genus_eq_euler": g_formula == g_euler,
        }
        if g_formula == 0:
            checks["simply_connected_identity"] = (
                solid3d.check_simply_connected_identity(census)
            )
        out.append(
            {
                "component_id": cid,
                "m3": census.m3,
                "m4": census.m4,
                "m5": census.m5,
                "m6": census.m6,
                "genus_formula": g_formula,
                "euler_genus_oracle": g_euler,
                "checks": checks,
            }
        )
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_gen(args) -> int:
    h, w = (int(v) for v in args.dims.lower().split("x"))
    try:
        if args.kind == "rect_with_holes":
            spec = gen.random_rect_spec(args.seed, (h, w), args.holes)
            g = gen.gen_rect_with_holes(spec)
        else:
            spec = gen.ShapeSpec(
                kind=gen.RANDOM_BLOB,
                dims=(h, w),
                seed=args.seed,
                target_area=args.area,
            )
            g = gen.gen_random_blob(spec)
    except HolecountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "pbm":
        sys.stdout.write(grid.to_pbm_p1(g))
    else:
        sys.stdout.write(grid.to_ascii01(g))
    return EXIT_OK


def census_path(g: grid.BinaryGrid) -> tuple[int | None, int]:
    """Holes of a single-component image by pure corner counting.

    Returns (holes, pixel_touches); one bounded-constant pass.
    """
    census, touches = corners.image_census(g)
    diff = census.c4 - census.c2
    h = 1 + diff // 4 if diff % 4 == 0 else None
    return h, touches


def oracle_path(g: grid.BinaryGrid) -> tuple[int, int]:
    """Holes of a single-component image by complement labeling.

    Returns (holes, pixel_touches); touch accounting mirrors the array
    passes performed: 5 per pixel per 4-connected labeling (self plus the
    structuring element reads) and 1 per mask comparison or pad copy.
    """
    n_px = g.cells.size
    labels, n = label_mask(g.cells)
    touches = 5 * n_px
    total = 0
    for cid in range(1, n + 1):
        mask = labels == cid
        touches += n_px
        padded = np.pad(mask, 1, constant_values=False)
        touches += padded.size
        _, regions = label_mask(~padded)
        touches += 5 * padded.size
        total += regions - 1
    return total, touches


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = []
    for size in sizes:
        spec = gen.random_rect_spec(args.seed, (size, size), min(5, size // 8))
        g = gen.gen_rect_with_holes(spec)
        n_px = size * size
        for rep in range(args.reps):
            t0 = time.perf_counter()
            h_census, census_touches = census_path(g)
            t1 = time.perf_counter()
            h_oracle, oracle_touches = oracle_path(g)
            t2 = time.perf_counter()
            rows.append(
                {
                    "size": size,
                    "rep": rep,
                    "pixels": n_px,
                    "census_s": t1 - t0,
                    "oracle_s": t2 - t1,
                    "census_px_per_s": n_px / max(t1 - t0, 1e-12),
                    "census_touches": census_touches,
                    "oracle_touches": oracle_touches,
                    "touches_per_px": census_touches / n_px,
                    "agree": h_census == h_oracle,
                }
            )
    if args.output == "csv":
        cols = list(rows[0].keys())
        print(",".join(cols))
        for row in rows:
            print(",".join(str(row[c]) for c in cols))
    else:
        print(
            f"{'size':>6} {'rep':>3} {'census_s':>10} {'oracle_s':>10} "
            f"{'Mpx/s':>8} {'touch/px':>8} {'agree':>5}"
        )
        for row in rows:
            print(
                f"{row['size']:>6} {row['rep']:>3} {row['census_s']:>10.4f} "
                f"{row['oracle_s']:>10.4f} "
                f"{row['census_px_per_s'] / 1e6:>8.1f} "
                f"{row['touches_per_px']:>8.1f} {str(row['agree']):>5}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holecount",
        description="Count holes in 2D binary-image components by corner census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="image file or '-' for standard input")
        p.add_argument(
            "--format", choices=["pbm", "ascii01"], default=None,
            help="input format (default: sniffed from the data)",
        )

    p = sub.add_parser("analyze", help="per-component census, formula, oracle")
    add_input(p)
    p.add_argument("--oracle", choices=["on", "off"], default="on")
    p.add_argument("--validate", choices=["on", "off"], default="on")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("curves", help="contours, per-curve censuses, accounting")
    add_input(p)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("genus3d", help="doubling, surface census, genus")
    add_input(p)
    p.set_defaults(func=cmd_genus3d)

    p = sub.add_parser("gen", help="generate a synthetic shape")
    p.add_argument("--kind", choices=["rect_with_holes", "random_blob"],
                   default="random_blob")
    p.add_argument("--dims", default="64x64", help="HxW")
    p.add_argument("--holes", type=int, default=2,
                   help="hole count for rect_with_holes")
    p.add_argument("--area", type=int, default=None,
                   help="target area for random_blob")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["pbm", "ascii01"], default="ascii01")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="census path vs oracle path timings")
    p.add_argument("--sizes", default="1024,2048", help="comma-separated sizes")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
