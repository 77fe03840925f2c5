"""Graph representation, ingestion and derived views.

Graphs are simple and directed. Vertices are identified by their exact
(case-sensitive) dataset name and addressed internally by position.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from .exceptions import (
    DuplicateEdge,
    EmptyInput,
    MalformedLine,
    MalformedRow,
    NegativeTripleCount,
    SelfLoop,
    UnknownVertex,
)

DIRECTIONS = ("in", "out", "total")


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable simple directed graph.

    Parameters
    ----------
    vertices : tuple of str
        Unique, non-empty vertex identifiers. Order is significant.
    edges : tuple of (int, int)
        ``(source, target)`` index pairs into ``vertices``.
    """

    vertices: tuple
    edges: tuple
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

        index = {}
        for i, name in enumerate(vertices):
            if not isinstance(name, str) or not name:
                raise ValueError(f"vertex identifiers must be non-empty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate vertex identifier {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

        n = len(vertices)
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise SelfLoop(f"self-loop on {vertices[u]!r}")
            if (u, v) in seen:
                raise DuplicateEdge(f"duplicate edge {vertices[u]!r} -> {vertices[v]!r}")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, pairs: Iterable, vertices: Optional[Iterable[str]] = None) -> "DirectedGraph":
        """Build a graph from ``(source_name, target_name)`` pairs.

        Vertices listed in ``vertices`` come first (isolated ones included);
        the remaining endpoints follow in first-appearance order.
        """
        names = list(vertices or ())
        index = {name: i for i, name in enumerate(names)}
        edges = []
        for u, v in pairs:
            for name in (u, v):
                if name not in index:
                    index[name] = len(names)
                    names.append(name)
            edges.append((index[u], index[v]))
        return cls(tuple(names), tuple(edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index_of(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vertex!r}") from None

    def __contains__(self, vertex) -> bool:
        return vertex in self._index

    def successors(self) -> list:
        """Out-neighbour index lists, in edge order."""
        out = [[] for _ in self.vertices]
        for u, v in self.edges:
            out[u].append(v)
        return out

    def in_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=np.int64)
        for _, v in self.edges:
            deg[v] += 1
        return deg

    def out_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=np.int64)
        for u, _ in self.edges:
            deg[u] += 1
        return deg

    def degrees(self, direction: str = "total") -> np.ndarray:
        if direction == "in":
            return self.in_degrees()
        if direction == "out":
            return self.out_degrees()
        if direction == "total":
            return self.in_degrees() + self.out_degrees()
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")

    def edge_names(self) -> list:
        return [(self.vertices[u], self.vertices[v]) for u, v in self.edges]


@dataclass(frozen=True)
class UndirectedView:
    """Simple undirected projection of a :class:`DirectedGraph`.

    ``edges`` holds ``(i, j)`` index pairs with ``i < j``, ordered by first
    occurrence in the base graph's edge list.
    """

    base: DirectedGraph
    edges: tuple

    @property
    def vertices(self) -> tuple:
        return self.base.vertices

    @property
    def n_vertices(self) -> int:
        return self.base.n_vertices

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list:
        """Sorted neighbour index lists."""
        adj = [[] for _ in range(self.n_vertices)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for lst in adj:
            lst.sort()
        return adj

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=np.int64)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (float)."""
        n = self.n_vertices
        a = np.zeros((n, n))
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1.0
        return a


@dataclass(frozen=True)
class VertexMetadata:
    content_label: Optional[str] = None
    triple_count: Optional[int] = None

    def __post_init__(self):
        if self.triple_count is not None and self.triple_count < 0:
            raise NegativeTripleCount(f"negative triple count {self.triple_count}")
        if self.content_label is not None and not self.content_label:
            raise ValueError("content label must be non-empty when present")


def _read_text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif hasattr(source, "read"):
        data = source.read()
    else:
        with open(source, "rb") as fh:
            data = fh.read()
    if isinstance(data, str):
        return data
    return data.decode("utf-8")


def load_edge_list(source) -> DirectedGraph:
    """Parse a TAB-separated edge list.

    ``source`` may be a path, bytes, or a binary/text stream. Lines starting
    with ``#`` and blank lines are skipped. Vertex order is first appearance,
    edge order is line order.
    """
    text = _read_text(source)
    names: list = []
    index: dict = {}
    edges: list = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise MalformedLine(f"expected 'source<TAB>target', got {line!r}", line=lineno)
        u, v = fields
        if u == v:
            raise SelfLoop(f"self-loop on {u!r}", line=lineno)
        for name in (u, v):
            if name not in index:
                index[name] = len(names)
                names.append(name)
        pair = (index[u], index[v])
        if pair in seen:
            raise DuplicateEdge(f"duplicate edge {u!r} -> {v!r}", line=lineno)
        seen.add(pair)
        edges.append(pair)
    if not names:
        raise EmptyInput("edge list contains no vertices")
    return DirectedGraph(tuple(names), tuple(edges))


def dump_edge_list(graph: DirectedGraph) -> bytes:
    """Serialize back to the edge-list format (no comments)."""
    lines = [f"{u}\t{v}\n" for u, v in graph.edge_names()]
    return "".join(lines).encode("utf-8")


def load_metadata(source, graph: DirectedGraph) -> dict:
    """Read the ``id,content,triples`` table into a total vertex mapping.

    Vertices missing from the file get an all-absent :class:`VertexMetadata`.
    """
    text = _read_text(source)
    result = {name: VertexMetadata() for name in graph.vertices}
    if not text.strip():
        return result

    reader = csv.reader(io.StringIO(text))
    header = None
    seen = set()
    for row in reader:
        lineno = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if header is None:
            header = [cell.strip() for cell in row]
            if header != ["id", "content", "triples"]:
                raise MalformedRow(f"expected header 'id,content,triples', got {row!r}", line=lineno)
            continue
        if len(row) != 3:
            raise MalformedRow(f"expected 3 fields, got {len(row)}", line=lineno)
        vid, content, triples = row[0], row[1].strip(), row[2].strip()
        if vid not in graph:
            raise UnknownVertex(f"line {lineno}: unknown vertex {vid!r}")
        if vid in seen:
            raise MalformedRow(f"duplicate metadata row for {vid!r}", line=lineno)
        seen.add(vid)
        if any(sep in content for sep in ";|"):
            raise MalformedRow(f"multiple content labels for {vid!r}", line=lineno)
        count = None
        if triples:
            try:
                count = int(triples)
            except ValueError:
                raise MalformedRow(f"triple count {triples!r} is not an integer", line=lineno) from None
            if count < 0:
                raise NegativeTripleCount(f"negative triple count for {vid!r}", line=lineno)
        result[vid] = VertexMetadata(content or None, count)
    return result


def undirected_view(graph: DirectedGraph) -> UndirectedView:
    """Collapse reciprocal pairs into single unweighted undirected edges."""
    seen = set()
    edges = []
    for u, v in graph.edges:
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return UndirectedView(graph, tuple(edges))


def induced_subgraph(graph: DirectedGraph, keep) -> DirectedGraph:
    """Subgraph on ``keep`` preserving relative vertex and edge order."""
    keep = set(keep)
    for name in keep:
        graph.index_of(name)
    old = [i for i, name in enumerate(graph.vertices) if name in keep]
    remap = {o: n for n, o in enumerate(old)}
    edges = tuple((remap[u], remap[v]) for u, v in graph.edges if u in remap and v in remap)
    return DirectedGraph(tuple(graph.vertices[i] for i in old), edges)


def degree(graph: DirectedGraph, vertex: str, direction: str = "total") -> int:
    i = graph.index_of(vertex)
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    return int(graph.degrees(direction)[i])


def attribute_values(metadata: Mapping, field_name: str) -> dict:
    """Pull one metadata field out as ``{vertex: value or None}``."""
    return {name: getattr(meta, field_name) for name, meta in metadata.items()}
