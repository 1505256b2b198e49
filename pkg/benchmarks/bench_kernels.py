"""Time the compiled and pure-Python kernels on the workloads that use them.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from normaltiling.dual import build_dual
from normaltiling.generators import disclination_patch, hex_patch
from normaltiling.kernels import backends
from normaltiling.layout import _problem, tutte_embedding


def workloads():
    g = build_dual(hex_patch(40), 0)
    dist = backends()["python"].bfs_distances(g.indptr, g.indices, 0)

    t = disclination_patch(8, 1)
    start = tutte_embedding(t)
    _, edges, corners = _problem(t)
    pos = np.array([start[v] for v in t.vertices])

    gen = np.zeros(6000, dtype=np.uint8)
    gen[::1000] = 1
    idx = np.zeros(6000, dtype=np.int64)
    idx[::997] = 2

    return {
        "bfs_distances (hex 40, 4921 nodes)": lambda m: m.bfs_distances(g.indptr, g.indices, 0),
        "ball_degrees (hex 40)": lambda m: m.ball_degrees(g.indptr, g.indices, dist),
        "grow_ring (6000 vertices)": lambda m: m.grow_ring(gen, idx),
        "layout_energy_grad (disclination 8)": lambda m: m.layout_energy_grad(
            pos, edges, 1.0, corners, 0.15, 10.0),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = backends()
    if "compiled" not in mods:
        print("compiled backend not built; timing the Python kernels only")
    names = sorted(mods)
    print(f"{'kernel':40s}" + "".join(f"{n:>14s}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for label, fn in workloads().items():
        best = {}
        for n in names:
            timer = timeit.Timer(lambda: fn(mods[n]))
            loops, _ = timer.autorange()
            best[n] = min(timer.repeat(args.repeat, loops)) / loops
        row = f"{label:40s}" + "".join(f"{best[n] * 1e3:12.3f}ms" for n in names)
        if len(names) > 1:
            row += f"  {best['python'] / best['compiled']:7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
