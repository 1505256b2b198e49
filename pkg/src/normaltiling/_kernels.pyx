# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_kernels_py`` exactly."""
import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, sqrt

cnp.import_array()


def bfs_distances(indptr, indices, Py_ssize_t origin):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int64)
    cdef long long[::1] dist = dist_arr
    cdef long long[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef long long u, w, du
    dist[origin] = 0
    queue[tail] = origin
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(ip[u], ip[u + 1]):
            w = ix[k]
            if dist[w] < 0:
                dist[w] = du
                queue[tail] = w
                tail += 1
    return dist_arr


def ball_degrees(indptr, indices, dist):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const long long[::1] d = np.ascontiguousarray(dist, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1, u, k
    out_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long du, dw, c
    for u in range(n):
        du = d[u]
        if du < 0:
            continue
        c = 0
        for k in range(ip[u], ip[u + 1]):
            dw = d[ix[k]]
            if dw >= 0 and dw <= du:
                c += 1
        out[u] = c
    return out_arr


def grow_ring(generating, index):
    cdef const unsigned char[::1] g = np.ascontiguousarray(generating, dtype=np.uint8)
    cdef const long long[::1] ix = np.ascontiguousarray(index, dtype=np.int64)
    cdef Py_ssize_t m = g.shape[0], j, pos = 0, total = m
    cdef long long r, extra
    for j in range(m):
        total += ix[j] + g[j]
    out_arr = np.zeros(total, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    for j in range(m):
        pos += 1  # regular vertex, already zero
        extra = ix[j] + g[j]
        for r in range(extra):
            out[pos] = 1
            pos += 1
    return out_arr


def layout_energy_grad(pos, edges, double target, corners, double margin, double weight):
    cdef const double[:, ::1] P = np.ascontiguousarray(pos, dtype=np.float64)
    cdef const long long[:, ::1] E = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    cdef const long long[:, ::1] Cn = np.ascontiguousarray(corners, dtype=np.int64).reshape(-1, 3)
    cdef Py_ssize_t n = P.shape[0], k
    grad_arr = np.zeros((n, 2), dtype=np.float64)
    cdef double[:, ::1] G = grad_arr
    cdef double energy = 0.0, dx, dy, length, r, c
    cdef double ax, ay, bx, by, turn, deficit, la, lb, gax, gay, gbx, gby
    cdef long long a, b, p, v, q
    for k in range(E.shape[0]):
        a = E[k, 0]
        b = E[k, 1]
        dx = P[b, 0] - P[a, 0]
        dy = P[b, 1] - P[a, 1]
        length = sqrt(dx * dx + dy * dy)
        r = length / target - 1.0
        energy += r * r
        if length > 0:
            c = 2.0 * r / (target * length)
            G[b, 0] += c * dx
            G[b, 1] += c * dy
            G[a, 0] -= c * dx
            G[a, 1] -= c * dy
    for k in range(Cn.shape[0]):
        p = Cn[k, 0]
        v = Cn[k, 1]
        q = Cn[k, 2]
        ax = P[v, 0] - P[p, 0]
        ay = P[v, 1] - P[p, 1]
        bx = P[q, 0] - P[v, 0]
        by = P[q, 1] - P[v, 1]
        turn = atan2(ax * by - ay * bx, ax * bx + ay * by)
        deficit = margin - turn
        if deficit <= 0:
            continue
        energy += weight * deficit * deficit
        la = ax * ax + ay * ay
        lb = bx * bx + by * by
        if la == 0 or lb == 0:
            continue
        gax = -ay / la
        gay = ax / la
        gbx = -by / lb
        gby = bx / lb
        c = -2.0 * weight * deficit
        G[q, 0] += c * gbx
        G[q, 1] += c * gby
        G[v, 0] += c * (-gbx - gax)
        G[v, 1] += c * (-gby - gay)
        G[p, 0] += c * gax
        G[p, 1] += c * gay
    return energy, grad_arr
