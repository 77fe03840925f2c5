import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lodgraph.exceptions import (
    DuplicateEdge,
    EmptyInput,
    IngestError,
    MalformedLine,
    MalformedRow,
    NegativeTripleCount,
    SelfLoop,
    UnknownVertex,
)
from lodgraph.graph import (
    DirectedGraph,
    VertexMetadata,
    degree,
    dump_edge_list,
    induced_subgraph,
    load_edge_list,
    load_metadata,
    undirected_view,
)


def test_load_two_lines():
    g = load_edge_list(b"a\tb\nb\tc\n")
    assert g.vertices == ("a", "b", "c")
    assert g.edges == ((0, 1), (1, 2))
    assert (g.n_vertices, g.n_edges) == (3, 2)


def test_load_skips_comments_and_blank_lines():
    g = load_edge_list(b"# header\n\na\tb\n  # indented comment\nb\ta\n")
    assert g.edge_names() == [("a", "b"), ("b", "a")]


def test_load_accepts_text_stream_and_path(tmp_path):
    p = tmp_path / "g.tsv"
    p.write_bytes("Σ data\tb\n".encode("utf-8"))
    assert load_edge_list(p).vertices == ("Σ data", "b")
    assert load_edge_list(io.StringIO("x\ty\n")).vertices == ("x", "y")


def test_vertex_names_case_sensitive():
    g = load_edge_list(b"EPrints\tePrints\n")
    assert g.n_vertices == 2


@pytest.mark.parametrize("text, exc, line", [
    (b"a\ta\n", SelfLoop, 1),
    (b"a\tb\na\tb\n", DuplicateEdge, 2),
    (b"a\tb\nab\n", MalformedLine, 2),
    (b"a\tb\tc\n", MalformedLine, 1),
    (b"a b\n", MalformedLine, 1),
])
def test_load_errors_carry_line(text, exc, line):
    with pytest.raises(exc) as info:
        load_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_empty_input():
    with pytest.raises(EmptyInput):
        load_edge_list(b"# only a comment\n\n")


def test_ingest_errors_are_value_errors():
    assert issubclass(IngestError, ValueError)


def test_constructor_validates():
    with pytest.raises(SelfLoop):
        DirectedGraph(("a",), ((0, 0),))
    with pytest.raises(DuplicateEdge):
        DirectedGraph(("a", "b"), ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        DirectedGraph(("a", "a"), ())
    with pytest.raises(ValueError):
        DirectedGraph(("a",), ((0, 1),))


def test_round_trip_bytes():
    text = b"a\tb\nc\ta\nb\tc\n"
    assert dump_edge_list(load_edge_list(text)) == text


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda e: e[0] != e[1]), min_size=1))
def test_round_trip_property(edges):
    text = "".join(f"n{u}\tn{v}\n" for u, v in sorted(edges)).encode()
    noisy = b"# c\n\n" + text.replace(b"\n", b"\n\n")
    assert dump_edge_list(load_edge_list(noisy)) == text


def test_metadata_rows():
    g = load_edge_list(b"DBpedia\tGeoNames\n")
    meta = load_metadata(b"id,content,triples\nDBpedia,general,\nGeoNames,location,93896732\n", g)
    assert meta["DBpedia"] == VertexMetadata("general", None)
    assert meta["GeoNames"].triple_count == 93896732


def test_metadata_empty_file_gives_absent_fields():
    g = load_edge_list(b"a\tb\n")
    assert load_metadata(b"", g) == {"a": VertexMetadata(), "b": VertexMetadata()}


def test_metadata_missing_vertex_is_absent():
    g = load_edge_list(b"a\tb\n")
    assert load_metadata(b"id,content,triples\na,music,3\n", g)["b"] == VertexMetadata()


@pytest.mark.parametrize("body, exc", [
    (b"id,content,triples\nNoSuchSet,music,\n", UnknownVertex),
    (b"id,content,triples\na,music,-4\n", NegativeTripleCount),
    (b"id,label,triples\na,music,1\n", MalformedRow),
    (b"id,content,triples\na,music\n", MalformedRow),
    (b"id,content,triples\na,music;media,\n", MalformedRow),
    (b"id,content,triples\na,music,\na,media,\n", MalformedRow),
    (b"id,content,triples\na,music,lots\n", MalformedRow),
])
def test_metadata_errors(body, exc):
    g = load_edge_list(b"a\tb\n")
    with pytest.raises(exc):
        load_metadata(body, g)


def test_unknown_vertex_message_is_plain():
    g = load_edge_list(b"a\tb\n")
    with pytest.raises(UnknownVertex) as info:
        g.index_of("zz")
    assert str(info.value) == "unknown vertex 'zz'"


def test_undirected_view_collapses_reciprocal():
    g = DirectedGraph.from_edges([("a", "b"), ("b", "a")])
    assert undirected_view(g).edges == ((0, 1),)
    g = DirectedGraph.from_edges([("a", "b"), ("b", "c")])
    assert undirected_view(g).n_edges == 2
    g = DirectedGraph(("a",), ())
    assert undirected_view(g).n_edges == 0


def test_view_neighbors_and_degrees():
    view = undirected_view(DirectedGraph.from_edges([("a", "b"), ("c", "a"), ("b", "a")]))
    assert view.neighbors() == [[1, 2], [0], [0]]
    assert list(view.degrees()) == [2, 1, 1]
    assert view.adjacency().sum() == 4


def test_induced_subgraph_cases():
    g = DirectedGraph.from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
    assert induced_subgraph(g, g.vertices) == g
    empty = induced_subgraph(g, set())
    assert (empty.n_vertices, empty.n_edges) == (0, 0)
    sub = induced_subgraph(g, {"c", "a", "d"})
    assert sub.vertices == ("a", "c", "d")
    assert sub.edge_names() == [("c", "a"), ("c", "d")]
    with pytest.raises(UnknownVertex):
        induced_subgraph(g, {"zz"})


def test_degree():
    g = DirectedGraph.from_edges([("a", "b"), ("c", "b")], vertices=["iso"])
    assert degree(g, "b", "in") == 2
    assert degree(g, "b", "out") == 0
    assert degree(g, "a", "total") == 1
    for d in ("in", "out", "total"):
        assert degree(g, "iso", d) == 0
    with pytest.raises(UnknownVertex):
        degree(g, "nope")


edge_sets = st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda e: e[0] != e[1]))


@settings(max_examples=100, deadline=None)
@given(edge_sets)
def test_degree_sums_equal_edge_count(edges):
    g = DirectedGraph(tuple(f"v{i}" for i in range(8)), tuple(edges))
    assert g.in_degrees().sum() == g.out_degrees().sum() == g.n_edges
    assert (g.degrees("total") == g.in_degrees() + g.out_degrees()).all()


@settings(max_examples=100, deadline=None)
@given(edge_sets)
def test_undirected_collapse_is_idempotent(edges):
    g = DirectedGraph(tuple(f"v{i}" for i in range(8)), tuple(edges))
    view = undirected_view(g)
    again = undirected_view(DirectedGraph(g.vertices, view.edges))
    assert set(again.edges) == set(view.edges)
    assert view.n_edges <= g.n_edges
    assert all(u < v for u, v in view.edges)


@settings(max_examples=100, deadline=None)
@given(edge_sets, st.sets(st.integers(0, 7)), st.sets(st.integers(0, 7)))
def test_induced_subgraph_monotone(edges, a, b):
    g = DirectedGraph(tuple(f"v{i}" for i in range(8)), tuple(edges))
    small = {f"v{i}" for i in a & b}
    big = {f"v{i}" for i in a}
    assert set(induced_subgraph(g, small).edge_names()) <= set(induced_subgraph(g, big).edge_names())


def test_view_adjacency_symmetric():
    g = DirectedGraph.from_edges([("a", "b"), ("b", "c"), ("c", "b")])
    a = undirected_view(g).adjacency()
    assert np.array_equal(a, a.T)
    assert a.sum() == 4
