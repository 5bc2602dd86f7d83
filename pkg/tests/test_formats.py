import struct

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from anydijkstra import formats
from anydijkstra.costs import load_pgm, write_pgm
from anydijkstra.errors import RasterFormatError


@given(
    st.integers(1, 6).flatmap(
        lambda h: st.integers(1, 6).flatmap(
            lambda w: arrays(np.float64, (h, w), elements=st.floats(allow_nan=False, width=64))
        )
    )
)
def test_distance_round_trip_bit_identical(dist):
    blob = formats.encode_distances(dist)
    assert len(blob) == 16 + 8 * dist.size
    assert formats.decode_distances(blob).tobytes() == dist.tobytes()


def test_distance_header_layout():
    blob = formats.encode_distances(np.array([[0.0, np.inf, 1.5]]))
    assert blob[:8] == b"ANYDIST1"
    assert struct.unpack("<II", blob[8:16]) == (1, 3)
    assert struct.unpack("<3d", blob[16:]) == (0.0, float("inf"), 1.5)


def test_pred_round_trip(tmp_path):
    pred = np.array([[0, 0, 1], [-1, 2, 4]], dtype=np.int64)
    formats.write_predecessors(tmp_path / "p.anyp", pred)
    blob = (tmp_path / "p.anyp").read_bytes()
    assert blob[:8] == b"ANYPRED1" and len(blob) == 16 + 48
    np.testing.assert_array_equal(formats.read_predecessors(tmp_path / "p.anyp"), pred)


def test_pred_range_checked():
    with pytest.raises(ValueError):
        formats.encode_predecessors(np.array([[0, 2]]))
    bad = b"ANYPRED1" + struct.pack("<II", 1, 1) + struct.pack("<q", 5)
    with pytest.raises(RasterFormatError):
        formats.decode_predecessors(bad)


@pytest.mark.parametrize(
    "blob",
    [
        b"ANYDIST",
        b"ANYPRED1" + struct.pack("<II", 1, 1) + bytes(8),
        b"ANYDIST1" + struct.pack("<II", 2, 2) + bytes(24),
        b"ANYDIST1" + struct.pack("<II", 1, 1) + bytes(16),
    ],
)
def test_bad_distance_rasters(blob):
    with pytest.raises(RasterFormatError):
        formats.decode_distances(blob)


def test_distance_image_normalization():
    img = formats.distance_image(np.array([[0.0, 2.0], [4.0, np.inf]]))
    assert img.maxval == 65535
    np.testing.assert_array_equal(img.pixels, [[0, 32768], [65535, 65535]])
    back = load_pgm(write_pgm(img))
    np.testing.assert_array_equal(back.pixels, img.pixels)


def test_distance_image_flat():
    img = formats.distance_image(np.zeros((2, 2)))
    assert not img.pixels.any()
