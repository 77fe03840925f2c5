import math
import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_connected_pairs, undirected_graph
from lodgraph.centrality import pagerank
from lodgraph.community import Partition, detect
from lodgraph.exceptions import InconsistentCoverage
from lodgraph.export import (
    MAX_RADIUS,
    MIN_RADIUS,
    PALETTE,
    SHAPES,
    community_style,
    export_graph,
    read_dot,
    vertex_radii,
)
from lodgraph.graph import DirectedGraph, VertexMetadata, undirected_view
from lodgraph.layout import layout_energy, layout_fruchterman_reingold


def test_single_vertex_centred():
    r = layout_fruchterman_reingold(undirected_view(DirectedGraph(("solo",), ())))
    assert r.positions == {"solo": (0.5, 0.5)}


def _integrate_pair(k, steps=20000, h=1e-4):
    """Explicit Euler on the two-body force law, starting well away from equilibrium."""
    d = 0.05
    for _ in range(steps):
        force = k * k / d - d * d / k
        d += h * 2 * force
    return d


def test_two_vertices_settle_near_ideal_length():
    view = undirected_view(DirectedGraph.from_edges([("a", "b")]))
    r = layout_fruchterman_reingold(view)
    sep = math.dist(r.positions["a"], r.positions["b"])
    target = _integrate_pair(math.sqrt(1 / 2))
    assert abs(sep - target) <= 0.25 * target


def test_deterministic_and_seed_sensitive():
    view = undirected_view(undirected_graph(9, random_connected_pairs(np.random.default_rng(1), 9, 0.3)))
    a = layout_fruchterman_reingold(view, seed=7)
    b = layout_fruchterman_reingold(view, seed=7)
    assert a.positions == b.positions
    assert layout_fruchterman_reingold(view, seed=8).positions != a.positions


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 14), st.integers(0, 2**31))
def test_positions_in_frame_and_energy_settles(n, seed):
    pairs = random_connected_pairs(np.random.default_rng(seed), n, 0.35)
    view = undirected_view(undirected_graph(n, pairs))
    history = []
    r = layout_fruchterman_reingold(view, iterations=200, seed=seed, history=history)
    pos = r.as_array(view.vertices)
    assert np.isfinite(pos).all() and (pos >= 0).all() and (pos <= 1).all()
    assert len(history) == 200
    k = math.sqrt(1 / n)
    edges = np.array(view.edges)
    energies = [layout_energy(h, edges, k) for h in history[-21:]]
    assert all(b <= a + 1e-12 for a, b in zip(energies, energies[1:]))


def test_disconnected_layout_is_finite():
    view = undirected_view(DirectedGraph.from_edges([("a", "b"), ("c", "d")], vertices=["e"]))
    pos = layout_fruchterman_reingold(view, iterations=50).as_array(view.vertices)
    assert np.isfinite(pos).all()


# export


def test_three_cycle_dot(three_cycle):
    out = export_graph(three_cycle)
    assert out.startswith(b'digraph "lodgraph" {')
    vertices, edges, _ = read_dot(out)
    assert vertices == ["a", "b", "c"]
    assert edges == [("a", "b"), ("b", "c"), ("c", "a")]


def test_two_communities_two_colours(two_cliques):
    g = two_cliques.base
    out = export_graph(g, partition=detect(two_cliques, "eigen")).decode()
    assert len(set(re.findall(r'fillcolor="(#[0-9A-F]{6})"', out))) == 2


def test_full_export_round_trip_and_stability(two_cliques):
    g = two_cliques.base
    part = detect(two_cliques, "walktrap")
    ranks = pagerank(g)
    layout = layout_fruchterman_reingold(two_cliques, iterations=100)
    meta = {v: VertexMetadata("music" if i % 2 else 'say "hi"', i) for i, v in enumerate(g.vertices)}
    a = export_graph(g, part, ranks, layout, "dot", meta)
    assert a == export_graph(g, part, ranks, layout, "dot", meta)
    vertices, edges, attrs = read_dot(a)
    assert vertices == list(g.vertices)
    assert edges == g.edge_names()
    v0 = g.vertices[0]
    assert attrs[v0]["content"] == 'say "hi"'
    assert int(attrs[v0]["community"]) == part.assignment[0]
    assert float(attrs[v0]["pagerank"]) == pytest.approx(ranks.scores[v0], rel=1e-11)
    x, y = attrs[v0]["pos"].rstrip("!").split(",")
    assert (float(x), float(y)) == pytest.approx(layout.positions[v0], abs=1e-6)


def test_graphml_typed_attributes(two_cliques):
    g = two_cliques.base
    ranks = pagerank(g)
    meta = {v: VertexMetadata("bio", 10) for v in g.vertices}
    out = export_graph(g, detect(two_cliques, "eigen"), ranks,
                       layout_fruchterman_reingold(two_cliques, iterations=20), "graphml", meta)
    root = ET.fromstring(out)
    ns = {"g": "http://graphml.graphdrawing.org/xmlns"}
    keys = {k.get("id"): k.get("attr.type") for k in root.findall("g:key", ns)}
    for name, kind in [("community", "int"), ("pagerank", "double"), ("x", "double"), ("y", "double"),
                       ("content", "string"), ("triples", "long")]:
        assert keys[name] == kind
    nodes = root.findall("g:graph/g:node", ns)
    assert [n.get("id") for n in nodes] == list(g.vertices)
    assert len(root.findall("g:graph/g:edge", ns)) == g.n_edges
    data = {d.get("key"): d.text for d in nodes[0].findall("g:data", ns)}
    assert data["triples"] == "10" and data["content"] == "bio"


def test_sizes_monotone_in_score():
    scores = {"a": 0.1, "b": 0.4, "c": 0.2, "d": 0.3}
    radii = vertex_radii(scores, list(scores))
    assert radii["b"] == MAX_RADIUS
    order = sorted(scores, key=scores.get)
    assert [radii[v] for v in order] == sorted(radii.values())
    assert all(MIN_RADIUS <= r <= MAX_RADIUS for r in radii.values())


def test_palette_wraps_with_shape_change():
    assert len(PALETTE) == len(set(PALETTE)) == 20
    assert community_style(0) == (PALETTE[0], SHAPES[0])
    assert community_style(20) == (PALETTE[0], SHAPES[1])
    assert community_style(23)[0] == PALETTE[3]


def test_coverage_checked(three_cycle):
    with pytest.raises(InconsistentCoverage):
        export_graph(three_cycle, partition=Partition((0, 0)))
    other = pagerank(DirectedGraph.from_edges([("a", "b")]))
    with pytest.raises(InconsistentCoverage):
        export_graph(three_cycle, ranks=other)
    with pytest.raises(ValueError):
        export_graph(three_cycle, format="svg")
