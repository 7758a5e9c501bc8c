import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphphys.graphs import Graph


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def make_graph(n, edges, **kwargs):
    return Graph(n, edges, **kwargs)


def random_connected_graph(rng, n, extra=0.3):
    from oracles import random_connected_edge_set

    return Graph(n, random_connected_edge_set(rng, n, extra))


def random_graph(rng, n, p, directed=False):
    from oracles import random_edge_set

    return Graph(n, random_edge_set(rng, n, p, directed), directed=directed)
