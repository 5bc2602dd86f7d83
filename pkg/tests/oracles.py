"""Test-only brute-force references, independent of the package code paths."""

import math

import numpy as np


def simple_paths(h, w, source):
    """Every simple path (as a list of (i, j)) that starts at ``source``."""
    out = []
    seen = {source}
    path = [source]

    def walk(node):
        out.append(list(path))
        i, j = node
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if 0 <= nb[0] < h and 0 <= nb[1] < w and nb not in seen:
                seen.add(nb)
                path.append(nb)
                walk(nb)
                path.pop()
                seen.discard(nb)

    walk(source)
    return out


def edge(vcost, hcost, a, b):
    if a[1] == b[1]:
        return float(vcost[min(a[0], b[0]), a[1]])
    return float(hcost[a[0], min(a[1], b[1])])


def fold_cost(vcost, hcost, path):
    c = 0.0
    for a, b in zip(path, path[1:]):
        c = c + edge(vcost, hcost, a, b)
    return c


def axis_runs(path):
    axes = ["v" if a[1] == b[1] else "h" for a, b in zip(path, path[1:])]
    runs = []
    for a in axes:
        if not runs or runs[-1] != a:
            runs.append(a)
    return runs


def sweeps_needed(path):
    """Sweeps in the order V, H, V, H, ... needed to realize the path."""
    runs = axis_runs(path)
    if not runs:
        return 0
    return len(runs) + (1 if runs[0] == "h" else 0)


def sweep_limited_distances(vcost, hcost, h, w, source, sweeps):
    """Best fold cost over simple paths realizable within ``sweeps`` sweeps."""
    vcost = np.asarray(vcost).reshape(h - 1, w)
    hcost = np.asarray(hcost).reshape(h, w - 1)
    best = np.full((h, w), math.inf)
    for p in simple_paths(h, w, source):
        if sweeps_needed(p) <= sweeps:
            c = fold_cost(vcost, hcost, p)
            t = p[-1]
            if c < best[t]:
                best[t] = c
    return best


def column_brute_force(bed, edges):
    """min over u of bed[u] + (edge sum between u and x), summed from u outward."""
    n = len(bed)
    out = list(bed)
    for x in range(n):
        for u in range(n):
            c = bed[u]
            if u < x:
                for k in range(u, x):
                    c = c + edges[k]
            elif u > x:
                for k in range(u - 1, x - 1, -1):
                    c = c + edges[k]
            out[x] = min(out[x], c)
    return out


def splitmix64_reference(seed, count):
    """Plain-integer splitmix64."""
    mask = (1 << 64) - 1
    state = seed & mask
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out
