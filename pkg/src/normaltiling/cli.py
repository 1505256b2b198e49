"""Command line front end.

Exit status: 0 on success, 1 when input fails validation (or a verification
check fails), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cover import check_lower_bounds, check_recurrences, simulate_cover
from .document import emit_tiling, growth_csv, parse_tiling
from .dual import bfs_balls, build_dual, growth_sequences
from .generators import disclination_patch, hex_patch
from .layout import LayoutParams, realize_layout
from .normalize import normalize
from .svg import MODES, render_svg
from .theorem import default_origin, verify_theorem


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _defect(text):
    try:
        ring, slot, index = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RING:SLOT:INDEX, got {text!r}")
    return ring, slot, index


def cmd_generate(args):
    if args.kind == "hex":
        t = hex_patch(args.rings, args.side)
    else:
        t = disclination_patch(args.rings, args.extra_index)
        if args.realize:
            params = LayoutParams(max_iterations=args.iterations,
                                  convexity_margin=args.margin,
                                  target_edge_length=args.side)
            t, report = realize_layout(t, params)
            print(f"layout: converged={report.converged} iterations={report.iterations} "
                  f"min_turn={report.min_turn:.4f}", file=sys.stderr)
            if not report.converged:
                _write(args.output, emit_tiling(t))
                return 1
    _write(args.output, emit_tiling(t))
    return 0


def cmd_normalize(args):
    t = parse_tiling(_read(args.input))
    out, trace = normalize(t)
    _write(args.output, emit_tiling(out))
    if args.trace:
        _write(args.trace, _json(trace.to_dict()))
    return 0


def _dual_of(args):
    t = parse_tiling(_read(args.input))
    norm, _ = normalize(t)
    origin = args.origin if args.origin is not None else default_origin(norm)
    return norm, build_dual(norm, origin)


def cmd_dual(args):
    _, g = _dual_of(args)
    _write(args.output, _json(g.to_dict()))
    return 0


def cmd_grow(args):
    _, g = _dual_of(args)
    bd = bfs_balls(g, args.radius)
    seq = growth_sequences(bd, g)
    _write(args.csv, growth_csv(seq))
    bad = [r for r in list(seq.residual_S) + list(seq.residual_J) if r]
    return 1 if bad or bd.violations else 0


def cmd_simulate(args):
    defects = {}
    for ring, slot, index in args.defect or ():
        defects[(ring, slot)] = defects.get((ring, slot), 0) + index
    cs = simulate_cover(args.base_degree, defects, args.radius)
    _write(args.csv, growth_csv(cs.sequences))
    ok = True
    if cs.i_max >= 2:
        ok = check_recurrences(cs).ok
    if not cs.defects or cs.last_defect_ring < cs.i_max:
        ok = ok and check_lower_bounds(cs).ok
    return 0 if ok else 1


def cmd_verify(args):
    t = parse_tiling(_read(args.input))
    report = verify_theorem(t, args.origin)
    _write(args.json, _json(report.to_dict()))
    return 0 if report.satisfied and report.packing_ok else 1


def cmd_render(args):
    t = parse_tiling(_read(args.input))
    _write(args.output, render_svg(t, args.mode, origin=args.origin, radius=args.radius))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="normaltiling", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated patch")
    gsub = gen.add_subparsers(dest="kind", required=True)
    gh = gsub.add_parser("hex", help="centered honeycomb patch")
    gh.add_argument("--rings", type=int, required=True)
    gh.add_argument("--side", type=float, default=1.0)
    gh.add_argument("-o", "--output")
    gd = gsub.add_parser("disclination", help="honeycomb with one (6+c)-gon")
    gd.add_argument("--rings", type=int, required=True)
    gd.add_argument("--extra-index", type=int, required=True)
    gd.add_argument("--realize", action="store_true", help="compute a convex layout")
    gd.add_argument("--side", type=float, default=1.0)
    gd.add_argument("--margin", type=float, default=LayoutParams.convexity_margin)
    gd.add_argument("--iterations", type=int, default=LayoutParams.max_iterations)
    gd.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    n = sub.add_parser("normalize", help="edge-to-edge refinement and vertex splitting")
    n.add_argument("input")
    n.add_argument("output")
    n.add_argument("--trace")
    n.set_defaults(func=cmd_normalize)

    d = sub.add_parser("dual", help="dual triangulation as JSON")
    d.add_argument("input")
    d.add_argument("--origin", type=int)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dual)

    g = sub.add_parser("grow", help="ball growth sequences as CSV")
    g.add_argument("input")
    g.add_argument("--origin", type=int)
    g.add_argument("--radius", type=int, required=True)
    g.add_argument("--csv")
    g.set_defaults(func=cmd_grow)

    s = sub.add_parser("simulate", help="synthetic cover growth as CSV")
    s.add_argument("--base-degree", type=int, required=True)
    s.add_argument("--defect", type=_defect, action="append", metavar="RING:SLOT:INDEX")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--csv")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="index-sum bound and packing checks")
    v.add_argument("input")
    v.add_argument("--origin", type=int)
    v.add_argument("--json")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="SVG picture")
    r.add_argument("input")
    r.add_argument("--mode", choices=MODES, default="tiling")
    r.add_argument("--origin", type=int)
    r.add_argument("--radius", type=int)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
