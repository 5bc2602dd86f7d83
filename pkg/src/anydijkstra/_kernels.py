"""Compiled inner loops. All kernels release the GIL so that disjoint column
ranges can run on separate threads."""

import numpy as np
from numba import njit

_TILE = 64


@njit(nogil=True, cache=True)
def relax_one(b, u, p, w, base, stride):
    """Two-pass relaxation of a single line, in place.

    ``b`` distances, ``u`` updated flags (set, never cleared here), ``p``
    predecessor slots for the line's nodes, ``w`` the ``len(b) - 1`` edge
    costs. The predecessor written for position ``x`` is the linear index
    ``base + x' * stride`` of the neighbour ``x'`` it was reached from.
    Returns the number of nodes that became updated.
    """
    n = b.shape[0]
    count = 0
    # selects instead of branches: improvements are frequent and unpredictable
    prev = b[0]
    for x in range(1, n):
        cand = prev + w[x - 1]
        cur = b[x]
        better = cand < cur
        prev = cand if better else cur
        b[x] = prev
        p[x] = base + (x - 1) * stride if better else p[x]
        seen = u[x]
        count += better > seen
        u[x] = seen | better
    prev = b[n - 1]
    for x in range(n - 2, -1, -1):
        cand = prev + w[x]
        cur = b[x]
        better = cand < cur
        prev = cand if better else cur
        b[x] = prev
        p[x] = base + (x + 1) * stride if better else p[x]
        seen = u[x]
        count += better > seen
        u[x] = seen | better
    return count


@njit(nogil=True, cache=True)
def relax_lines(bed, upd, pred, cost, lo, hi, line_stride, pos_stride, skip_clean, force_line):
    """Relax lines ``lo..hi-1`` of orientation-local buffers.

    ``bed``, ``upd`` and ``pred`` have one row per line; line ``c`` position
    ``x`` is the node with linear index ``c * line_stride + x * pos_stride``.
    With ``skip_clean`` a line is skipped when none of its nodes changed in
    the previous sweep, unless it is ``force_line``.
    """
    n = bed.shape[1]
    total = 0
    for c in range(lo, hi):
        u = upd[c]
        if skip_clean and c != force_line:
            dirty = False
            for x in range(n):
                if u[x]:
                    dirty = True
                    break
            if not dirty:
                continue
        u[:] = False
        total += relax_one(bed[c], u, pred[c], cost[c], c * line_stride, pos_stride)
    return total


@njit(nogil=True, cache=True)
def transpose_rows(src, dst, lo, hi):
    """``dst[r, c] = src[c, r]`` for output rows ``lo..hi-1``, tiled."""
    ncols = src.shape[0]
    for r0 in range(lo, hi, _TILE):
        r1 = min(r0 + _TILE, hi)
        for c0 in range(0, ncols, _TILE):
            c1 = min(c0 + _TILE, ncols)
            for r in range(r0, r1):
                for c in range(c0, c1):
                    dst[r, c] = src[c, r]


@njit(nogil=True, cache=True)
def heap_dijkstra(vcost, hcost, h, w, source, dist, pred):
    """Binary-heap Dijkstra with lazy deletion on the lattice.

    Benchmark baseline only; ``vcost`` is ``(h-1, w)``, ``hcost`` ``(h, w-1)``,
    node ids are column-major. Returns the number of heap pops.
    """
    n = h * w
    cap = 4 * n + 1
    keys = np.empty(cap, np.float64)
    ids = np.empty(cap, np.int64)
    size = 0
    for k in range(n):
        dist[k] = np.inf
        pred[k] = -1
    done = np.zeros(n, np.bool_)
    dist[source] = 0.0
    pred[source] = source
    keys[0] = 0.0
    ids[0] = source
    size = 1
    pops = 0
    while size > 0:
        d = keys[0]
        v = ids[0]
        size -= 1
        # sift the last entry down from the root
        lk = keys[size]
        li = ids[size]
        pos = 0
        while True:
            child = 2 * pos + 1
            if child >= size:
                break
            if child + 1 < size and (
                keys[child + 1] < keys[child]
                or (keys[child + 1] == keys[child] and ids[child + 1] < ids[child])
            ):
                child += 1
            if keys[child] < lk or (keys[child] == lk and ids[child] < li):
                keys[pos] = keys[child]
                ids[pos] = ids[child]
                pos = child
            else:
                break
        keys[pos] = lk
        ids[pos] = li
        if done[v]:
            continue
        done[v] = True
        pops += 1
        j = v // h
        i = v - j * h
        for k in range(4):
            if k == 0:
                if i == 0:
                    continue
                t = v - 1
                c = vcost[i - 1, j]
            elif k == 1:
                if i == h - 1:
                    continue
                t = v + 1
                c = vcost[i, j]
            elif k == 2:
                if j == 0:
                    continue
                t = v - h
                c = hcost[i, j - 1]
            else:
                if j == w - 1:
                    continue
                t = v + h
                c = hcost[i, j]
            nd = d + c
            if nd < dist[t]:
                dist[t] = nd
                pred[t] = v
                # sift up
                pos = size
                size += 1
                while pos > 0:
                    parent = (pos - 1) // 2
                    if keys[parent] > nd or (keys[parent] == nd and ids[parent] > t):
                        keys[pos] = keys[parent]
                        ids[pos] = ids[parent]
                        pos = parent
                    else:
                        break
                keys[pos] = nd
                ids[pos] = t
    return pops
