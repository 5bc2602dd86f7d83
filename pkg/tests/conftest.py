import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from anydijkstra.lattice import make_lattice  # noqa: E402


@pytest.fixture
def proof_lattice():
    """A=(0,0) B=(0,1) C=(1,0) D=(1,1); A-B 1, A-C 1, B-D 1, C-D 2."""
    return make_lattice((2, 2), [[1.0, 1.0]], [[1.0], [2.0]])


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
