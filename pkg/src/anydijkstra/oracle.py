"""Reference solvers used as ground truth.

These are deliberately plain Python with no shared code with the sweep
solver: a binary-heap Dijkstra, exhaustive simple-path enumeration for tiny
lattices, and a Dijkstra over (node, incoming axis) states that also
minimizes the number of turns among minimum-cost paths.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import LatticeTooLargeError
from .lattice import Lattice, check_coord, linear_index

BRUTE_FORCE_MAX_NODES = 16

# axis tags for the min-turn search
_NONE, _VERT, _HORIZ = 0, 1, 2


@dataclass(frozen=True)
class ExactResult:
    dist: np.ndarray
    pred: np.ndarray

    @property
    def bed(self) -> np.ndarray:
        return self.dist


@dataclass(frozen=True)
class TurnAnnotatedResult:
    dist: np.ndarray
    min_turns: np.ndarray


def _adjacency(lattice: Lattice):
    """Neighbour lists ``[(target, cost, axis), ...]`` per column-major index."""
    h, w = lattice.dims
    v = lattice.vcost.tolist()
    hc = lattice.hcost.tolist()
    adj = [[] for _ in range(h * w)]
    for j in range(w):
        for i in range(h):
            k = j * h + i
            nbrs = adj[k]
            if i > 0:
                nbrs.append((k - 1, v[i - 1][j], _VERT))
            if i < h - 1:
                nbrs.append((k + 1, v[i][j], _VERT))
            if j > 0:
                nbrs.append((k - h, hc[i][j - 1], _HORIZ))
            if j < w - 1:
                nbrs.append((k + h, hc[i][j], _HORIZ))
    return adj


def _to_grid(flat, h: int, w: int, dtype) -> np.ndarray:
    return np.asarray(flat, dtype=dtype).reshape(w, h).T.copy()


def dijkstra_reference(lattice: Lattice, source) -> ExactResult:
    """Single-source distances with a binary heap and lazy deletion.

    Equal keys pop in increasing linear-index order.
    """
    h, w = lattice.dims
    s = linear_index(source, lattice.dims)
    adj = _adjacency(lattice)
    dist = [math.inf] * (h * w)
    pred = [-1] * (h * w)
    done = [False] * (h * w)
    dist[s] = 0.0
    pred[s] = s
    heap = [(0.0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for t, c, _ in adj[u]:
            nd = d + c
            if nd < dist[t]:
                dist[t] = nd
                pred[t] = u
                heapq.heappush(heap, (nd, t))
    return ExactResult(_to_grid(dist, h, w, np.float64), _to_grid(pred, h, w, np.int64))


def brute_force_distances(lattice: Lattice, source) -> np.ndarray:
    """Minimum cost over every simple path from ``source`` to every node.

    Costs are accumulated left to right along each path. Only for lattices
    with at most ``BRUTE_FORCE_MAX_NODES`` nodes.
    """
    h, w = lattice.dims
    if h * w > BRUTE_FORCE_MAX_NODES:
        raise LatticeTooLargeError(
            f"{h}x{w} lattice exceeds {BRUTE_FORCE_MAX_NODES} nodes for exhaustive search"
        )
    s = linear_index(source, lattice.dims)
    adj = _adjacency(lattice)
    best = [math.inf] * (h * w)
    on_path = [False] * (h * w)

    def walk(u: int, cost: float) -> None:
        if cost < best[u]:
            best[u] = cost
        on_path[u] = True
        for t, c, _ in adj[u]:
            if not on_path[t]:
                walk(t, cost + c)
        on_path[u] = False

    walk(s, 0.0)
    return _to_grid(best, h, w, np.float64)


def brute_force_distance(lattice: Lattice, source, target) -> float:
    target = check_coord(target, lattice.dims)
    return float(brute_force_distances(lattice, source)[target])


def min_turn_oracle(lattice: Lattice, source) -> TurnAnnotatedResult:
    """Distances plus the fewest turns achievable by any minimum-cost path.

    Searches states ``(node, axis of the last edge)`` with the key
    ``(cost, turns)`` compared lexicographically; costs are compared
    exactly. A turn is a change of axis between consecutive edges.
    """
    h, w = lattice.dims
    n = h * w
    s = linear_index(source, lattice.dims)
    adj = _adjacency(lattice)
    inf = (math.inf, math.inf)
    best = [[inf, inf, inf] for _ in range(n)]
    best[s][_NONE] = (0.0, 0)
    heap = [(0.0, 0, s, _NONE)]
    while heap:
        cost, turns, u, axis = heapq.heappop(heap)
        if (cost, turns) > best[u][axis]:
            continue
        for t, c, edge_axis in adj[u]:
            key = (cost + c, turns + (axis != _NONE and axis != edge_axis))
            if key < best[t][edge_axis]:
                best[t][edge_axis] = key
                heapq.heappush(heap, (key[0], key[1], t, edge_axis))
    dist = np.empty(n)
    turns = np.empty(n, dtype=np.int64)
    for k in range(n):
        c, m = min(best[k])
        dist[k] = c
        turns[k] = m
    return TurnAnnotatedResult(_to_grid(dist, h, w, np.float64), _to_grid(turns, h, w, np.int64))
