"""On-disk rasters for distance and predecessor fields.

Both share a 16-byte header: an 8-byte ASCII magic, then ``H`` and ``W`` as
little-endian uint32. The payload is ``H * W`` row-major little-endian
values: float64 distances (``inf`` = unreached) or int64 linear
predecessor indices (``-1`` = none).
"""

from __future__ import annotations

import os
import struct

import numpy as np

from .costs import GrayImage
from .errors import RasterFormatError

DIST_MAGIC = b"ANYDIST1"
PRED_MAGIC = b"ANYPRED1"
_HEADER = struct.Struct("<8sII")


def _encode(magic: bytes, arr: np.ndarray, dtype: str) -> bytes:
    if arr.ndim != 2:
        raise ValueError("raster must be 2D")
    h, w = arr.shape
    return _HEADER.pack(magic, h, w) + np.ascontiguousarray(arr, dtype=dtype).tobytes()


def _decode(magic: bytes, data: bytes, dtype: str) -> np.ndarray:
    if len(data) < _HEADER.size:
        raise RasterFormatError(f"file is {len(data)} bytes, shorter than the header")
    got, h, w = _HEADER.unpack_from(data)
    if got != magic:
        raise RasterFormatError(f"bad magic {got!r}, expected {magic!r}")
    expected = _HEADER.size + 8 * h * w
    if len(data) != expected:
        raise RasterFormatError(f"{h}x{w} raster must be {expected} bytes, got {len(data)}")
    return np.frombuffer(data, dtype=dtype, offset=_HEADER.size).reshape(h, w).astype(dtype[1:])


def encode_distances(dist: np.ndarray) -> bytes:
    return _encode(DIST_MAGIC, np.asarray(dist), "<f8")


def decode_distances(data: bytes) -> np.ndarray:
    return _decode(DIST_MAGIC, data, "<f8")


def encode_predecessors(pred: np.ndarray) -> bytes:
    pred = np.asarray(pred)
    if pred.size and (pred.min() < -1 or pred.max() >= pred.size):
        raise ValueError("predecessor indices must lie in [-1, H*W)")
    return _encode(PRED_MAGIC, pred, "<i8")


def decode_predecessors(data: bytes) -> np.ndarray:
    pred = _decode(PRED_MAGIC, data, "<i8")
    if pred.size and (pred.min() < -1 or pred.max() >= pred.size):
        raise RasterFormatError("predecessor index out of range")
    return pred


def write_distances(path: str | os.PathLike, dist: np.ndarray) -> None:
    with open(path, "wb") as fh:
        fh.write(encode_distances(dist))


def read_distances(path: str | os.PathLike) -> np.ndarray:
    with open(path, "rb") as fh:
        return decode_distances(fh.read())


def write_predecessors(path: str | os.PathLike, pred: np.ndarray) -> None:
    with open(path, "wb") as fh:
        fh.write(encode_predecessors(pred))


def read_predecessors(path: str | os.PathLike) -> np.ndarray:
    with open(path, "rb") as fh:
        return decode_predecessors(fh.read())


def distance_image(dist: np.ndarray, maxval: int = 65535) -> GrayImage:
    """Min-max normalize finite distances to ``0..maxval``; ``inf`` maps to ``maxval``."""
    dist = np.asarray(dist, dtype=np.float64)
    finite = np.isfinite(dist)
    out = np.full(dist.shape, maxval, dtype=np.int64)
    if finite.any():
        lo, hi = dist[finite].min(), dist[finite].max()
        span = hi - lo
        scaled = (dist[finite] - lo) / span if span > 0 else np.zeros(finite.sum())
        out[finite] = np.rint(scaled * maxval).astype(np.int64)
    return GrayImage(out, maxval)
