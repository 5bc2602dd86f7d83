"""Anytime, cache-friendly single-source shortest paths on image lattices."""

from .analysis import ErrorReport, Path, convergence_trace, count_turns, error_vs_oracle, extract_path
from .costs import GrayImage, RngSpec, image_to_costs, load_pgm, random_lattice, write_pgm
from .lattice import GridDims, Lattice, NodeCoord, linear_index, make_lattice, to_coords, transposed, unit_lattice
from .oracle import ExactResult, brute_force_distance, dijkstra_reference, min_turn_oracle
from .solver import IterationReport, SolveResult, SolverState, converged, init_state, iterate, solve, sweep

__version__ = "0.1.0"

__all__ = [
    "ErrorReport",
    "ExactResult",
    "GrayImage",
    "GridDims",
    "IterationReport",
    "Lattice",
    "NodeCoord",
    "Path",
    "RngSpec",
    "SolveResult",
    "SolverState",
    "brute_force_distance",
    "convergence_trace",
    "converged",
    "count_turns",
    "dijkstra_reference",
    "error_vs_oracle",
    "extract_path",
    "image_to_costs",
    "init_state",
    "iterate",
    "linear_index",
    "load_pgm",
    "make_lattice",
    "min_turn_oracle",
    "random_lattice",
    "solve",
    "sweep",
    "to_coords",
    "transposed",
    "unit_lattice",
    "write_pgm",
]
