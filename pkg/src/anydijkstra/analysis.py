"""Paths, turn counts, error metrics and per-iteration convergence traces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import PathCorruptionError, UnreachableError
from .lattice import Lattice, NodeCoord, check_coord, linear_index, to_coords
from .oracle import ExactResult, dijkstra_reference
from .solver import IterationReport, solve

MISMATCH_RTOL = 1e-9


@dataclass(frozen=True)
class Path:
    nodes: list[NodeCoord]
    cost: float
    turns: int

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class ErrorReport:
    l1: float
    linf: float
    mismatched: int


class TraceEntry(NamedTuple):
    iteration: int
    error: ErrorReport
    updates: int
    wall_time: float


def _fields(result):
    bed = result.bed if hasattr(result, "bed") else result.dist
    return np.asarray(bed), np.asarray(result.pred)


def count_turns(path) -> int:
    """Number of axis changes between consecutive edges of a path."""
    nodes = path.nodes if isinstance(path, Path) else list(path)
    axes = ["v" if a[1] == b[1] else "h" for a, b in zip(nodes, nodes[1:])]
    return sum(1 for a, b in zip(axes, axes[1:]) if a != b)


def path_cost(lattice: Lattice, nodes) -> float:
    """Sum of edge costs along ``nodes``, accumulated from the first node."""
    cost = 0.0
    for a, b in zip(nodes, nodes[1:]):
        cost = cost + lattice.edge_cost(a, b)
    return cost


def extract_path(result, source, target, lattice: Lattice) -> Path:
    """Follow predecessors from ``target`` back to ``source``.

    ``result`` is a :class:`~anydijkstra.solver.SolveResult` or an
    :class:`~anydijkstra.oracle.ExactResult`.
    """
    bed, pred = _fields(result)
    dims = lattice.dims
    source = check_coord(source, dims)
    target = check_coord(target, dims)
    if not np.isfinite(bed[target]):
        raise UnreachableError(f"node {tuple(target)} has not been reached")
    s = linear_index(source, dims)
    k = linear_index(target, dims)
    chain = [k]
    while k != s:
        nxt = int(pred[to_coords(k, dims)])
        if nxt < 0 or nxt == k or len(chain) > dims.n_nodes:
            raise PathCorruptionError(f"predecessor trace from {tuple(target)} does not reach the source")
        chain.append(nxt)
        k = nxt
    nodes = [to_coords(k, dims) for k in reversed(chain)]
    return Path(nodes, path_cost(lattice, nodes), count_turns(nodes))


def error_vs_oracle(approx_bed, exact) -> ErrorReport:
    """Compare an approximate distance field with exact distances.

    Unreached (infinite) approximate entries count as an error equal to the
    exact distance and are always mismatched.
    """
    exact_d = np.asarray(exact.dist if isinstance(exact, ExactResult) else exact, dtype=np.float64)
    approx = np.asarray(approx_bed, dtype=np.float64)
    if approx.shape != exact_d.shape:
        raise ValueError(f"shape mismatch {approx.shape} vs {exact_d.shape}")
    known = np.isfinite(exact_d)
    a, e = approx[known], exact_d[known]
    reached = np.isfinite(a)
    err = np.where(reached, np.abs(np.where(reached, a, 0.0) - e), e)
    bad = ~reached | (err > MISMATCH_RTOL * (1.0 + np.abs(e)))
    return ErrorReport(
        l1=float(err.sum()),
        linf=float(err.max()) if err.size else 0.0,
        mismatched=int(bad.sum()),
    )


def convergence_trace(
    lattice: Lattice,
    source,
    max_iterations: Optional[int] = None,
    workers: int = 1,
    exact: Optional[ExactResult] = None,
    on_iteration: Optional[Callable[[IterationReport, np.ndarray], None]] = None,
) -> list[TraceEntry]:
    """Error against the heap oracle after every iteration of a solve.

    ``on_iteration`` sees the same arguments as the solver's observer and
    runs before the error is recorded (used to snapshot fields).
    """
    if exact is None:
        exact = dijkstra_reference(lattice, source)
    trace: list[TraceEntry] = []

    def observe(report: IterationReport, bed: np.ndarray) -> None:
        if on_iteration is not None:
            on_iteration(report, bed)
        trace.append(TraceEntry(report.iteration, error_vs_oracle(bed, exact), report.updates, report.wall_time))

    solve(lattice, source, max_iterations=max_iterations, on_iteration=observe, workers=workers)
    return trace
