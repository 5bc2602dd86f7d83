"""Timing harness comparing the sweep solver with a compiled heap Dijkstra."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .costs import random_lattice
from .lattice import Lattice, linear_index, unit_lattice
from .solver import solve

CSV_HEADER = "size,seed,threads,algo,k_iterations,wall_ms"


@dataclass(frozen=True)
class BenchRow:
    size: int
    seed: int
    threads: int
    algo: str
    k_iterations: Optional[int]
    wall_ms: float

    def csv(self) -> str:
        k = "" if self.k_iterations is None else str(self.k_iterations)
        return f"{self.size},{self.seed},{self.threads},{self.algo},{k},{self.wall_ms:.3f}"


def heap_baseline(lattice: Lattice, source) -> tuple[np.ndarray, np.ndarray]:
    """Compiled binary-heap Dijkstra; returns ``(dist, pred)`` as ``(H, W)`` arrays."""
    h, w = lattice.dims
    dist = np.empty(h * w)
    pred = np.empty(h * w, dtype=np.int64)
    vc = np.ascontiguousarray(lattice.vcost).reshape(h - 1, w)
    hc = np.ascontiguousarray(lattice.hcost).reshape(h, w - 1)
    _kernels.heap_dijkstra(vc, hc, h, w, linear_index(source, lattice.dims), dist, pred)
    return dist.reshape(w, h).T.copy(), pred.reshape(w, h).T.copy()


def warm_up() -> None:
    """Trigger kernel compilation so it is not timed."""
    lat = unit_lattice((3, 3))
    solve(lat, (0, 0))
    solve(lat, (0, 0), workers=2)
    heap_baseline(lat, (0, 0))


def _median_ms(fn, repeats: int) -> tuple[float, object]:
    times, out = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(times), out


def run_bench(
    sizes: Iterable[int],
    seeds: Iterable[int],
    threads: Iterable[int],
    repeats: int = 3,
    source=(0, 0),
    heap: bool = True,
) -> list[BenchRow]:
    """Median wall time of ``repeats`` runs per configuration.

    Each ``size`` is a square ``size x size`` random lattice. The heap
    baseline is single-threaded and timed once per (size, seed).
    """
    warm_up()
    rows = []
    for size in sizes:
        for seed in seeds:
            lat = random_lattice((size, size), seed)
            for t in threads:
                ms, res = _median_ms(lambda: solve(lat, source, workers=t), repeats)
                rows.append(BenchRow(size, seed, t, "sweep", res.k_iterations, ms))
            if heap:
                ms, _ = _median_ms(lambda: heap_baseline(lat, source), repeats)
                rows.append(BenchRow(size, seed, 1, "heap", None, ms))
    return rows
