"""Iterative column-sweep shortest paths with anytime stopping.

Each iteration relaxes every column of the lattice (vertical sweep), then
every row (horizontal sweep). Within a sweep a line only reads and writes its
own nodes, so lines are handed out to worker threads in contiguous blocks
and the result does not depend on the worker count.

Memory layout: ``bed``, ``pred`` and ``upd`` live in orientation-local
buffers with one C-contiguous row per line of the upcoming sweep. At every
orientation flip the three buffers are transposed explicitly into spare
buffers, so both sweep directions stream through memory. ``pred`` always
holds column-major linear node indices, whatever the buffer layout.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .lattice import GridDims, Lattice, NodeCoord, check_coord, linear_index


class Orientation(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class IterationReport:
    iteration: int
    updates_vertical: int
    updates_horizontal: int
    wall_time: float  # seconds

    @property
    def updates(self) -> int:
        return self.updates_vertical + self.updates_horizontal

    @property
    def converged(self) -> bool:
        return self.updates == 0


@dataclass
class SolverState:
    """Mutable fields of a running solve.

    ``bed``, ``pred`` and ``upd`` are in the layout of the next sweep (see module
    docstring); use :attr:`distances`, :attr:`predecessors` and
    :attr:`updated` for ``(H, W)`` views in lattice coordinates.
    """

    dims: GridDims
    source: NodeCoord
    bed: np.ndarray
    upd: np.ndarray
    pred: np.ndarray
    orientation: Orientation = Orientation.VERTICAL
    iteration: int = 0
    last_updates: Optional[int] = None
    _spare_bed: np.ndarray = field(default=None, repr=False)
    _spare_upd: np.ndarray = field(default=None, repr=False)
    _spare_pred: np.ndarray = field(default=None, repr=False)
    _horizontal_sweeps: int = field(default=0, repr=False)

    def _lattice_view(self, buf: np.ndarray) -> np.ndarray:
        view = buf.T if self.orientation is Orientation.VERTICAL else buf[...]
        view = view.view()
        view.setflags(write=False)
        return view

    @property
    def distances(self) -> np.ndarray:
        return self._lattice_view(self.bed)

    @property
    def updated(self) -> np.ndarray:
        return self._lattice_view(self.upd)

    @property
    def predecessors(self) -> np.ndarray:
        return self._lattice_view(self.pred)

    @property
    def col_dirty(self) -> np.ndarray:
        """Per-line summary of ``upd`` for the next sweep's lines."""
        return self.upd.any(axis=1)


@dataclass
class SolveResult:
    bed: np.ndarray
    pred: np.ndarray
    k_iterations: int
    reports: list[IterationReport]
    converged: bool
    source: NodeCoord

    @property
    def dims(self) -> GridDims:
        return GridDims(*self.bed.shape)

    @property
    def updates_total(self) -> int:
        return sum(r.updates for r in self.reports)


def init_state(lattice: Lattice, source) -> SolverState:
    h, w = lattice.dims
    source = check_coord(source, lattice.dims)
    s = linear_index(source, lattice.dims)
    # vertical sweeps come first: one buffer row per lattice column
    bed = np.full((w, h), np.inf)
    upd = np.zeros((w, h), dtype=np.bool_)
    pred = np.full((w, h), -1, dtype=np.int64)
    bed[source.col, source.row] = 0.0
    upd[source.col, source.row] = True
    pred[source.col, source.row] = s
    return SolverState(
        dims=lattice.dims,
        source=source,
        bed=bed,
        upd=upd,
        pred=pred,
        _spare_bed=np.empty((h, w)),
        _spare_upd=np.empty((h, w), dtype=np.bool_),
        _spare_pred=np.empty((h, w), dtype=np.int64),
    )


def relax_column(bed_col, pred_col, edge_costs, col_base: int, dirty: bool = True, stride: int = 1):
    """Relax one line against its own edges.

    Returns new ``(bed, pred, updates)`` arrays; inputs are not modified.
    Node ``x`` of the line has linear index ``col_base + x * stride``.
    A clean line (``dirty=False``) is returned unchanged.
    """
    b = np.array(bed_col, dtype=np.float64)
    p = np.array(pred_col, dtype=np.int64)
    w = np.asarray(edge_costs, dtype=np.float64)
    if w.shape != (max(len(b) - 1, 0),):
        raise ValueError(f"expected {len(b) - 1} edge costs, got {w.shape}")
    if not dirty or len(b) < 2:
        return b, p, 0
    u = np.zeros(len(b), dtype=np.bool_)
    n = _kernels.relax_one(b, u, p, w, col_base, stride)
    return b, p, int(n)


def relax_column_per_source(bed_col, pred_col, edge_costs, col_base: int, sources=None, stride: int = 1):
    """Literal per-source formulation, used to cross-check :func:`relax_column`.

    For every source ``u`` (default: all nodes with finite distance) the
    running sum ``bed[u] + w + ... + w`` is pushed up and down the line and
    kept wherever it is strictly better. Quadratic in the line length.
    """
    b0 = np.array(bed_col, dtype=np.float64)
    out = b0.copy()
    p = np.array(pred_col, dtype=np.int64)
    w = np.asarray(edge_costs, dtype=np.float64)
    n = len(b0)
    changed = np.zeros(n, dtype=bool)
    if sources is None:
        sources = [u for u in range(n) if np.isfinite(b0[u])]
    for u in sources:
        c = b0[u]
        for x in range(u + 1, n):
            c = c + w[x - 1]
            if c < out[x]:
                out[x] = c
                p[x] = col_base + (x - 1) * stride
                changed[x] = True
        c = b0[u]
        for x in range(u - 1, -1, -1):
            c = c + w[x]
            if c < out[x]:
                out[x] = c
                p[x] = col_base + (x + 1) * stride
                changed[x] = True
    return out, p, int(changed.sum())


def _blocks(n: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n))
    edges = np.linspace(0, n, parts + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def _run(pool: Optional[ThreadPoolExecutor], fn, blocks):
    if pool is None or len(blocks) == 1:
        return [fn(lo, hi) for lo, hi in blocks]
    return list(pool.map(lambda blk: fn(*blk), blocks))


def sweep(
    state: SolverState,
    lattice: Lattice,
    workers: int = 1,
    skip_clean: bool = False,
    pool: Optional[ThreadPoolExecutor] = None,
) -> int:
    """Relax every line of the current orientation, then flip orientation.

    Lines are split into ``workers`` contiguous blocks run on ``pool`` (a
    temporary pool is created when none is given); the call returns only
    after every block is done. With ``skip_clean`` lines holding no node
    updated by the previous sweep are left untouched. Returns the number of
    nodes whose distance strictly decreased.
    """
    if workers > 1 and pool is None:
        with ThreadPoolExecutor(max_workers=workers) as tmp:
            return sweep(state, lattice, workers, skip_clean, tmp)
    h, w = lattice.dims
    if state.orientation is Orientation.VERTICAL:
        cost = lattice.vcost.T
        line_stride, pos_stride = h, 1
        force_line = -1
    else:
        cost = lattice.tvcost.T
        line_stride, pos_stride = 1, h
        # the source row has never been swept horizontally before the first pass
        force_line = state.source.row if state._horizontal_sweeps == 0 else -1
    if cost.shape[1] == 0:
        cost = np.zeros((state.bed.shape[0], 0))
    bed, upd, pred = state.bed, state.upd, state.pred
    if workers == 1:
        pool = None
    blocks = _blocks(bed.shape[0], workers)
    counts = _run(
        pool,
        lambda lo, hi: _kernels.relax_lines(
            bed, upd, pred, cost, lo, hi, line_stride, pos_stride, skip_clean, force_line
        ),
        blocks,
    )

    new_bed, new_upd, new_pred = state._spare_bed, state._spare_upd, state._spare_pred

    def _flip(lo, hi):
        _kernels.transpose_rows(bed, new_bed, lo, hi)
        _kernels.transpose_rows(pred, new_pred, lo, hi)
        _kernels.transpose_rows(upd, new_upd, lo, hi)

    _run(pool, _flip, _blocks(new_bed.shape[0], workers))
    state.bed, state._spare_bed = new_bed, bed
    state.upd, state._spare_upd = new_upd, upd
    state.pred, state._spare_pred = new_pred, pred
    if state.orientation is Orientation.VERTICAL:
        state.orientation = Orientation.HORIZONTAL
    else:
        state.orientation = Orientation.VERTICAL
        state._horizontal_sweeps += 1
    return int(sum(counts))


def iterate(
    state: SolverState,
    lattice: Lattice,
    workers: int = 1,
    skip_clean: bool = False,
    pool: Optional[ThreadPoolExecutor] = None,
) -> IterationReport:
    """One vertical sweep followed by one horizontal sweep."""
    if state.orientation is not Orientation.VERTICAL:
        raise RuntimeError("iterate() must start from a vertical sweep")
    if workers > 1 and pool is None:
        with ThreadPoolExecutor(max_workers=workers) as tmp:
            return iterate(state, lattice, workers, skip_clean, tmp)
    t0 = time.perf_counter()
    uv = sweep(state, lattice, workers, skip_clean, pool)
    uh = sweep(state, lattice, workers, skip_clean, pool)
    state.iteration += 1
    state.last_updates = uv + uh
    return IterationReport(state.iteration, uv, uh, time.perf_counter() - t0)


def converged(state: SolverState) -> bool:
    """True once a full iteration changed nothing (or for a single node)."""
    if state.dims.n_nodes == 1:
        return True
    return state.last_updates == 0


Observer = Callable[[IterationReport, np.ndarray], Optional[bool]]


def solve(
    lattice: Lattice,
    source,
    max_iterations: Optional[int] = None,
    on_iteration: Optional[Observer] = None,
    workers: int = 1,
    skip_clean: bool = False,
) -> SolveResult:
    """Run full iterations until one produces no update.

    ``max_iterations`` caps the run (anytime mode; the default cap
    ``H * W + 1`` is a safety net that a valid lattice never reaches).
    ``max_iterations=0`` returns the freshly initialized fields.

    ``on_iteration(report, distances)`` is called after each iteration, in
    the calling thread, with a read-only ``(H, W)`` view of the current
    distances; returning a truthy value stops the run after that iteration.
    """
    state = init_state(lattice, source)
    cap = lattice.dims.n_nodes + 1 if max_iterations is None else int(max_iterations)
    if cap < 0:
        raise ValueError("max_iterations must be non-negative")
    reports: list[IterationReport] = []
    done = False
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while state.iteration < cap:
            report = iterate(state, lattice, workers, skip_clean, pool)
            reports.append(report)
            stop = on_iteration is not None and on_iteration(report, state.distances)
            if report.converged:
                done = True
                break
            if stop:
                break
        else:
            done = converged(state)
    finally:
        if pool is not None:
            pool.shutdown()
    return SolveResult(
        bed=np.ascontiguousarray(state.distances),
        pred=np.ascontiguousarray(state.predecessors),
        k_iterations=state.iteration,
        reports=reports,
        converged=done,
        source=state.source,
    )
