import numpy as np
import pytest

from helpers import random_digraph
from oracles import assortativity_closed_form
from lodgraph.exceptions import EmptyEdgeSet, TooFewSamples, ZeroVariance
from lodgraph.graph import DirectedGraph
from lodgraph.stats.assortativity import assortativity, endpoint_vectors
from lodgraph.stats.correlation import correlate

STAR = DirectedGraph.from_edges([("c", "l1"), ("c", "l2"), ("c", "l3")])


def test_single_edge_vectors():
    vec = endpoint_vectors(DirectedGraph.from_edges([("a", "b")]), "total")
    assert list(vec.tail_degrees) == [1] and list(vec.head_degrees) == [1]


def test_star_vectors():
    vec = endpoint_vectors(STAR, "total")
    assert list(vec.tail_degrees) == [3, 3, 3]
    assert list(vec.head_degrees) == [1, 1, 1]


def test_cycle_in_vectors(three_cycle):
    vec = endpoint_vectors(three_cycle, "in")
    assert list(vec.tail_degrees) == [1, 1, 1] == list(vec.head_degrees)


def test_symmetrized_doubles_edges():
    vec = endpoint_vectors(STAR, "total", "symmetrized")
    assert len(vec) == 6
    assert list(vec.tail_degrees) == [3, 3, 3, 1, 1, 1]


def test_star_symmetrized_is_perfectly_disassortative():
    assert assortativity(STAR, "total", "pearson", "symmetrized").coefficient == pytest.approx(-1.0)


def test_cycle_has_zero_variance():
    cycle = DirectedGraph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    with pytest.raises(ZeroVariance):
        assortativity(cycle, "total", "pearson", "symmetrized")


def test_errors():
    with pytest.raises(EmptyEdgeSet):
        endpoint_vectors(DirectedGraph(("a",), ()))
    with pytest.raises(TooFewSamples):
        assortativity(DirectedGraph.from_edges([("a", "b"), ("b", "c")]))
    with pytest.raises(ValueError):
        endpoint_vectors(STAR, "total", "sideways")


def test_pearson_equals_closed_form_on_random_graphs():
    rng = np.random.default_rng(41)
    checked = 0
    while checked < 100:
        g = random_digraph(rng, int(rng.integers(4, 15)), rng.uniform(0.15, 0.5))
        for direction in ("in", "out", "total"):
            vec = endpoint_vectors(g, direction)
            j, k = list(vec.tail_degrees), list(vec.head_degrees)
            if g.n_edges < 3 or len(set(j)) < 2 or len(set(k)) < 2:
                continue
            r = assortativity(g, direction, "pearson").coefficient
            assert abs(r - assortativity_closed_form(j, k)) < 1e-12
        checked += 1


@pytest.mark.parametrize("method", ["pearson", "spearman", "kendall"])
def test_assortativity_is_correlate_of_vectors(method):
    rng = np.random.default_rng(43)
    g = random_digraph(rng, 12, 0.3)
    vec = endpoint_vectors(g, "out")
    assert assortativity(g, "out", method) == correlate(vec.tail_degrees, vec.head_degrees, method)
