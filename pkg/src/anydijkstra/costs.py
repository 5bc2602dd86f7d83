"""Lattice builders: grayscale images and seeded random weights."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import PGMParseError
from .lattice import GridDims, Lattice, make_lattice

SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GrayImage:
    pixels: np.ndarray  # (H, W) integers
    maxval: int = 255

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.size == 0:
            raise ValueError("image must be a non-empty 2D array")
        if not 1 <= self.maxval <= 65535:
            raise ValueError(f"maxval {self.maxval} outside 1..65535")
        if px.min() < 0 or px.max() > self.maxval:
            raise ValueError("pixel values outside [0, maxval]")

    @property
    def dims(self) -> GridDims:
        return GridDims(*np.shape(self.pixels))


class Distribution(Enum):
    UNIFORM_UNIT = "uniform-unit"


@dataclass(frozen=True)
class RngSpec:
    seed: int
    distribution: Distribution = Distribution.UNIFORM_UNIT


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First ``count`` outputs of splitmix64 started at ``seed``, as uint64."""
    k = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK64) + k * np.uint64(SPLITMIX_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def uniform_unit(seed: int, count: int) -> np.ndarray:
    """Doubles in [0, 1): top 53 bits of each splitmix64 output."""
    return (splitmix64(seed, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def random_lattice(dims, rng: RngSpec | int) -> Lattice:
    """Uniform [0, 1) edge costs; ``vcost`` then ``hcost`` in row-major order."""
    if isinstance(rng, int):
        rng = RngSpec(rng)
    h, w = GridDims(*dims)
    nv, nh = (h - 1) * w, h * (w - 1)
    vals = uniform_unit(rng.seed, nv + nh)
    return make_lattice((h, w), vals[:nv].reshape(h - 1, w), vals[nv:].reshape(h, w - 1))


def random_image(dims, seed: int, maxval: int = 255) -> GrayImage:
    """Image with pixels drawn uniformly from ``0..maxval`` via splitmix64."""
    h, w = GridDims(*dims)
    px = (uniform_unit(seed, h * w) * (maxval + 1)).astype(np.int64).reshape(h, w)
    return GrayImage(px, maxval)


def image_to_costs(img: GrayImage) -> Lattice:
    """Edge cost = absolute brightness difference between the two pixels."""
    px = np.asarray(img.pixels, dtype=np.float64)
    return make_lattice(px.shape, np.abs(np.diff(px, axis=0)), np.abs(np.diff(px, axis=1)))


_WS = b" \t\n\r\v\f"


def _header_tokens(data: bytes, count: int, pos: int):
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and (data[pos] in _WS or data[pos] == ord("#")):
            if data[pos] == ord("#"):
                while pos < n and data[pos] not in b"\r\n":
                    pos += 1
            else:
                pos += 1
        if pos >= n:
            raise PGMParseError("truncated header", pos)
        start = pos
        while pos < n and data[pos] not in _WS and data[pos] != ord("#"):
            pos += 1
        tok = data[start:pos]
        if not tok.isdigit():
            raise PGMParseError(f"expected an unsigned integer, got {tok[:16]!r}", start)
        tokens.append((int(tok), start))
    return tokens, pos


def load_pgm(data: bytes) -> GrayImage:
    """Decode a P2 (ASCII) or P5 (binary) PGM.

    16-bit P5 samples are big-endian. Raises ``PGMParseError`` with the byte
    offset of the first problem.
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PGMParseError(f"unsupported magic {magic!r}", 0)
    header, pos = _header_tokens(data, 3, 2)
    (w, wpos), (h, hpos), (maxval, mpos) = header
    if w < 1:
        raise PGMParseError("width must be positive", wpos)
    if h < 1:
        raise PGMParseError("height must be positive", hpos)
    if not 1 <= maxval <= 65535:
        raise PGMParseError(f"maxval {maxval} outside 1..65535", mpos)

    if magic == b"P5":
        if pos >= len(data) or data[pos] not in _WS:
            raise PGMParseError("missing whitespace after maxval", pos)
        pos += 1
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        need = h * w * dtype.itemsize
        if len(data) - pos < need:
            raise PGMParseError(f"raster needs {need} bytes, found {len(data) - pos}", len(data))
        px = np.frombuffer(data, dtype=dtype, count=h * w, offset=pos).astype(np.int64)
        if px.max() > maxval:
            bad = int(np.argmax(px > maxval))
            raise PGMParseError(f"sample {px[bad]} exceeds maxval {maxval}", pos + bad * dtype.itemsize)
    else:
        body = data[pos:]
        tokens = [(m.group(), pos + m.start()) for m in re.finditer(rb"\S+", body)]
        if len(tokens) < h * w:
            raise PGMParseError(f"raster needs {h * w} samples, found {len(tokens)}", len(data))
        vals = []
        for tok, off in tokens[: h * w]:
            if not tok.isdigit():
                raise PGMParseError(f"bad sample {tok[:16]!r}", off)
            v = int(tok)
            if v > maxval:
                raise PGMParseError(f"sample {v} exceeds maxval {maxval}", off)
            vals.append(v)
        px = np.array(vals, dtype=np.int64)
    return GrayImage(px.reshape(h, w), maxval)


def write_pgm(img: GrayImage) -> bytes:
    """Encode as binary P5 (big-endian samples when ``maxval > 255``)."""
    h, w = img.dims
    dtype = ">u2" if img.maxval > 255 else "u1"
    header = f"P5\n{w} {h}\n{img.maxval}\n".encode("ascii")
    return header + np.asarray(img.pixels).astype(dtype).tobytes()
