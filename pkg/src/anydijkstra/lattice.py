"""4-connected weighted lattices and their indexing conventions.

A lattice with ``H`` rows and ``W`` columns stores its edge costs in two
matrices:

* ``vcost`` of shape ``(H-1, W)``: ``vcost[i, j]`` joins ``(i, j)`` and ``(i+1, j)``
* ``hcost`` of shape ``(H, W-1)``: ``hcost[i, j]`` joins ``(i, j)`` and ``(i, j+1)``

The matrices of the transposed lattice (``tvcost``, ``thcost``) are
materialized once at construction, so a sweep in either orientation reads
its edge costs sequentially. Every matrix is stored column-contiguous
(Fortran order): the edges met while walking down one column of the
current orientation sit next to each other in memory.

Nodes are addressed 0-based. The linear index is column-major,
``j * H + i``, which is the 0-based form of the 1-based Matlab formula
``(s_j - 1) * H + s_i``.

Cost of a full solve is O(K * n * sqrt(n)) for an ``n``-node square lattice
with ``n = H * W`` and ``K`` iterations; each sweep touches every node once
per pass.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import CostValidationError, DimensionError


class GridDims(NamedTuple):
    height: int
    width: int

    @property
    def n_nodes(self) -> int:
        return self.height * self.width


class NodeCoord(NamedTuple):
    row: int
    col: int


def _as_dims(dims) -> GridDims:
    h, w = (int(v) for v in dims)
    if h < 1 or w < 1:
        raise DimensionError(f"lattice dimensions must be positive, got {h}x{w}")
    return GridDims(h, w)


def _frozen_fortran(a: np.ndarray) -> np.ndarray:
    out = np.asfortranarray(a, dtype=np.float64).copy(order="F")
    out.setflags(write=False)
    return out


def _check_costs(name: str, raw, shape: tuple[int, int]) -> np.ndarray:
    a = np.asarray(raw, dtype=np.float64)
    if a.size == 0 and shape[0] * shape[1] == 0:
        a = a.reshape(shape)
    if a.shape != shape:
        raise DimensionError(f"{name} must have shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise CostValidationError(f"{name} contains non-finite costs")
    if np.any(a < 0):
        raise CostValidationError(f"{name} contains negative costs")
    return a


class Lattice:
    """Immutable edge-cost storage for an ``H x W`` 4-connected grid.

    Build instances through :func:`make_lattice`; the constructor trusts its
    arguments and is used internally to share arrays between a lattice and
    its transpose.
    """

    __slots__ = ("dims", "vcost", "hcost", "tvcost", "thcost")

    def __init__(self, dims: GridDims, vcost, hcost, tvcost, thcost):
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "vcost", vcost)
        object.__setattr__(self, "hcost", hcost)
        object.__setattr__(self, "tvcost", tvcost)
        object.__setattr__(self, "thcost", thcost)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @property
    def height(self) -> int:
        return self.dims.height

    @property
    def width(self) -> int:
        return self.dims.width

    @property
    def shape(self) -> tuple[int, int]:
        return (self.dims.height, self.dims.width)

    def __repr__(self) -> str:
        return f"Lattice({self.height}x{self.width})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.dims == other.dims
            and np.array_equal(self.vcost, other.vcost)
            and np.array_equal(self.hcost, other.hcost)
            and np.array_equal(self.tvcost, other.tvcost)
            and np.array_equal(self.thcost, other.thcost)
        )

    __hash__ = None

    def edge_cost(self, a, b) -> float:
        """Cost of the edge between 4-adjacent nodes ``a`` and ``b`` (order-free)."""
        (ai, aj), (bi, bj) = a, b
        check_coord(NodeCoord(ai, aj), self.dims)
        check_coord(NodeCoord(bi, bj), self.dims)
        if aj == bj and abs(ai - bi) == 1:
            return float(self.vcost[min(ai, bi), aj])
        if ai == bi and abs(aj - bj) == 1:
            return float(self.hcost[ai, min(aj, bj)])
        raise ValueError(f"{tuple(a)} and {tuple(b)} are not 4-adjacent")

    def neighbors(self, coord) -> list[tuple[NodeCoord, float]]:
        i, j = coord
        h, w = self.shape
        out = []
        if i > 0:
            out.append((NodeCoord(i - 1, j), float(self.vcost[i - 1, j])))
        if i < h - 1:
            out.append((NodeCoord(i + 1, j), float(self.vcost[i, j])))
        if j > 0:
            out.append((NodeCoord(i, j - 1), float(self.hcost[i, j - 1])))
        if j < w - 1:
            out.append((NodeCoord(i, j + 1), float(self.hcost[i, j])))
        return out


def make_lattice(dims, vcost, hcost) -> Lattice:
    """Validate cost matrices and build a lattice with its transposed copies.

    Raises ``DimensionError`` on a shape mismatch and ``CostValidationError``
    when any cost is negative or not finite.
    """
    dims = _as_dims(dims)
    h, w = dims
    v = _check_costs("vcost", vcost, (h - 1, w))
    hc = _check_costs("hcost", hcost, (h, w - 1))
    # the transposed lattice's vertical edges are this lattice's horizontal ones
    return Lattice(
        dims,
        _frozen_fortran(v),
        _frozen_fortran(hc),
        _frozen_fortran(hc.T),
        _frozen_fortran(v.T),
    )


def transposed(lattice: Lattice) -> Lattice:
    """The same graph with rows and columns swapped. Shares storage."""
    h, w = lattice.dims
    return Lattice(
        GridDims(w, h),
        lattice.tvcost,
        lattice.thcost,
        lattice.vcost,
        lattice.hcost,
    )


def check_coord(coord, dims) -> NodeCoord:
    i, j = coord
    h, w = dims
    if not (0 <= i < h and 0 <= j < w):
        raise IndexError(f"node {(i, j)} outside {h}x{w} lattice")
    return NodeCoord(int(i), int(j))


def linear_index(coord, dims) -> int:
    """Column-major linear index ``j * H + i`` of a 0-based coordinate."""
    i, j = check_coord(coord, dims)
    return j * dims[0] + i


def to_coords(index: int, dims) -> NodeCoord:
    h, w = dims
    if not 0 <= index < h * w:
        raise IndexError(f"linear index {index} outside {h}x{w} lattice")
    j, i = divmod(int(index), h)
    return NodeCoord(i, j)


def unit_lattice(dims) -> Lattice:
    """Lattice where every edge costs 1."""
    h, w = _as_dims(dims)
    return make_lattice((h, w), np.ones((h - 1, w)), np.ones((h, w - 1)))
