"""Pure-Python reference versions of the hot kernels.

Signatures and results match the compiled ``_kernels`` module exactly; the
dispatcher in :mod:`normaltiling.kernels` picks one at import time.
"""
from collections import deque
import math

import numpy as np


def bfs_distances(indptr, indices, origin):
    """Unit-length graph distances from ``origin`` over a CSR adjacency.

    Unreached nodes get -1.
    """
    n = len(indptr) - 1
    dist = [-1] * n
    dist[origin] = 0
    queue = deque([origin])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return np.asarray(dist, dtype=np.int64)


def ball_degrees(indptr, indices, dist):
    """Degree of each node inside the ball whose radius is its own distance."""
    n = len(indptr) - 1
    out = [0] * n
    for u in range(n):
        du = dist[u]
        if du < 0:
            continue
        c = 0
        for k in range(indptr[u], indptr[u + 1]):
            dw = dist[indices[k]]
            if 0 <= dw <= du:
                c += 1
        out[u] = c
    return np.asarray(out, dtype=np.int64)


def grow_ring(generating, index):
    """Next ring of the annulus construction.

    For each ring vertex v_j, in cyclic order: one regular vertex for the
    edge (v_{j-1}, v_j), then ``index[j] + generating[j]`` generating ones.
    Returns the generating flags of the new ring.
    """
    out = []
    for g, ix in zip(generating, index):
        out.append(0)
        out.extend([1] * (int(ix) + int(g)))
    return np.asarray(out, dtype=np.uint8)


def layout_energy_grad(pos, edges, target, corners, margin, weight):
    """Edge-length spread plus a convexity penalty, and its gradient.

    energy = sum_edges (|e|/target - 1)^2
             + weight * sum_corners max(0, margin - turn)^2
    where ``turn`` is the signed exterior angle at the corner
    ``(prev, cur, next)`` of a counter-clockwise face.
    """
    n = len(pos)
    grad = [[0.0, 0.0] for _ in range(n)]
    energy = 0.0
    for a, b in edges:
        dx = pos[b][0] - pos[a][0]
        dy = pos[b][1] - pos[a][1]
        length = math.hypot(dx, dy)
        r = length / target - 1.0
        energy += r * r
        if length > 0:
            c = 2.0 * r / (target * length)
            grad[b][0] += c * dx
            grad[b][1] += c * dy
            grad[a][0] -= c * dx
            grad[a][1] -= c * dy
    for p, v, q in corners:
        ax = pos[v][0] - pos[p][0]
        ay = pos[v][1] - pos[p][1]
        bx = pos[q][0] - pos[v][0]
        by = pos[q][1] - pos[v][1]
        turn = math.atan2(ax * by - ay * bx, ax * bx + ay * by)
        deficit = margin - turn
        if deficit <= 0:
            continue
        energy += weight * deficit * deficit
        la = ax * ax + ay * ay
        lb = bx * bx + by * by
        if la == 0 or lb == 0:
            continue
        # d(turn) = d(angle of b) - d(angle of a); d(angle of e)/de = (-ey, ex)/|e|^2
        ga = (-ay / la, ax / la)
        gb = (-by / lb, bx / lb)
        c = -2.0 * weight * deficit
        # turn depends on a = v - p and b = q - v
        grad[q][0] += c * gb[0]
        grad[q][1] += c * gb[1]
        grad[v][0] += c * (-gb[0] - ga[0])
        grad[v][1] += c * (-gb[1] - ga[1])
        grad[p][0] += c * ga[0]
        grad[p][1] += c * ga[1]
    return energy, np.asarray(grad, dtype=np.float64).reshape(n, 2)
