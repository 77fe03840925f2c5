import numpy as np
import pytest

from helpers import two_cliques_pairs, undirected_graph
from lodgraph.graph import DirectedGraph, undirected_view


@pytest.fixture
def two_cliques():
    return undirected_view(undirected_graph(8, two_cliques_pairs()))


@pytest.fixture
def three_cycle():
    return DirectedGraph(("a", "b", "c"), ((0, 1), (1, 2), (2, 0)))


@pytest.fixture
def rng():
    return np.random.default_rng(20090301)
