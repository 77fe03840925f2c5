"""DOT and GraphML emission with community colours and PageRank sizing."""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from typing import Mapping, Optional

from .community.partition import Partition
from .exceptions import InconsistentCoverage
from .graph import DirectedGraph

FORMATS = ("dot", "graphml")

# 20 well-separated colours (Kelly's maximum-contrast set, white/black removed)
PALETTE = (
    "#F3C300", "#875692", "#F38400", "#A1CAF1", "#BE0032",
    "#C2B280", "#848482", "#008856", "#E68FAC", "#0067A5",
    "#F99379", "#604E97", "#F6A600", "#B3446C", "#DCD300",
    "#882D17", "#8DB600", "#654522", "#E25822", "#2B3D26",
)
# communities beyond the palette wrap around with a different node shape
SHAPES = ("ellipse", "box", "diamond", "triangle", "hexagon")
MIN_RADIUS = 0.1
MAX_RADIUS = 0.6
DEFAULT_RADIUS = 0.25


def community_style(community: int) -> tuple:
    return PALETTE[community % len(PALETTE)], SHAPES[(community // len(PALETTE)) % len(SHAPES)]


def vertex_radii(scores: Mapping, vertices) -> dict:
    """Linear map of score to radius; the top score gets ``MAX_RADIUS``."""
    top = max(scores[v] for v in vertices)
    return {v: MIN_RADIUS + (MAX_RADIUS - MIN_RADIUS) * (scores[v] / top if top > 0 else 0.0)
            for v in vertices}


def _check_coverage(graph, partition, ranks, layout, metadata):
    n = graph.n_vertices
    if partition is not None and len(partition) != n:
        raise InconsistentCoverage(f"partition covers {len(partition)} of {n} vertices")
    for what, mapping in (("pagerank", getattr(ranks, "scores", None)),
                          ("layout", getattr(layout, "positions", None)),
                          ("metadata", metadata)):
        if mapping is not None:
            missing = [v for v in graph.vertices if v not in mapping]
            if missing:
                raise InconsistentCoverage(f"{what} is missing vertex {missing[0]!r}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _to_dot(graph, partition, ranks, layout, metadata) -> str:
    radii = vertex_radii(ranks.scores, graph.vertices) if ranks is not None else None
    lines = ['digraph "lodgraph" {', "  node [style=filled];"]
    for i, v in enumerate(graph.vertices):
        attrs = []
        if partition is not None:
            c = partition.assignment[i]
            color, shape = community_style(c)
            attrs += [f'community="{c}"', f'fillcolor="{color}"', f'shape="{shape}"']
        if radii is not None:
            attrs += [f'pagerank="{ranks.scores[v]:.12g}"', f'width="{_fmt(2 * radii[v])}"',
                      f'height="{_fmt(2 * radii[v])}"']
        if layout is not None:
            x, y = layout.positions[v]
            attrs.append(f'pos="{_fmt(x)},{_fmt(y)}!"')
        if metadata is not None:
            meta = metadata[v]
            if meta.content_label is not None:
                attrs.append(f"content={_quote(meta.content_label)}")
            if meta.triple_count is not None:
                attrs.append(f'triples="{meta.triple_count}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(v)}{suffix};")
    for u, w in graph.edge_names():
        lines.append(f"  {_quote(u)} -> {_quote(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPHML_KEYS = (
    ("community", "int"),
    ("pagerank", "double"),
    ("x", "double"),
    ("y", "double"),
    ("content", "string"),
    ("triples", "long"),
    ("color", "string"),
    ("size", "double"),
)


def _to_graphml(graph, partition, ranks, layout, metadata) -> str:
    ns = "http://graphml.graphdrawing.org/xmlns"
    root = ET.Element("graphml", {"xmlns": ns})
    for name, kind in _GRAPHML_KEYS:
        ET.SubElement(root, "key", {"id": name, "for": "node", "attr.name": name, "attr.type": kind})
    g = ET.SubElement(root, "graph", {"id": "G", "edgedefault": "directed"})
    radii = vertex_radii(ranks.scores, graph.vertices) if ranks is not None else None
    for i, v in enumerate(graph.vertices):
        node = ET.SubElement(g, "node", {"id": v})
        data = []
        if partition is not None:
            c = partition.assignment[i]
            data += [("community", str(c)), ("color", community_style(c)[0])]
        if ranks is not None:
            data += [("pagerank", f"{ranks.scores[v]:.12g}"), ("size", _fmt(radii[v]))]
        if layout is not None:
            x, y = layout.positions[v]
            data += [("x", _fmt(x)), ("y", _fmt(y))]
        if metadata is not None:
            meta = metadata[v]
            if meta.content_label is not None:
                data.append(("content", meta.content_label))
            if meta.triple_count is not None:
                data.append(("triples", str(meta.triple_count)))
        for key, value in data:
            ET.SubElement(node, "data", {"key": key}).text = value
    for j, (u, w) in enumerate(graph.edge_names()):
        ET.SubElement(g, "edge", {"id": f"e{j}", "source": u, "target": w})
    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def export_graph(graph: DirectedGraph, partition: Optional[Partition] = None, ranks=None,
                 layout=None, format: str = "dot", metadata: Optional[Mapping] = None) -> bytes:
    """Render the graph as DOT or GraphML bytes.

    Fill colour encodes the community, node size the PageRank score and
    ``pos``/``x``/``y`` the layout. Output is byte-stable for equal inputs.
    """
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    _check_coverage(graph, partition, ranks, layout, metadata)
    render = _to_dot if format == "dot" else _to_graphml
    return render(graph, partition, ranks, layout, metadata).encode("utf-8")


_TOKEN = re.compile(r'"((?:[^"\\]|\\.)*)"|(->|--)|([\[\];{}])|([^\s\[\];{}"=,]+)|(=|,)')


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def read_dot(text) -> tuple:
    """Parse the DOT subset written by :func:`export_graph`.

    Returns ``(vertices, edges, attributes)`` where ``edges`` are name pairs
    and ``attributes`` maps vertex name to its attribute dict.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    tokens = []
    for m in _TOKEN.finditer(text):
        quoted, arrow, punct, word, sep = m.groups()
        if quoted is not None:
            tokens.append(("id", _unquote(quoted)))
        elif arrow:
            tokens.append(("arrow", arrow))
        elif punct:
            tokens.append((punct, punct))
        elif word:
            tokens.append(("id", word))
        else:
            tokens.append((sep, sep))

    pos = 0
    while tokens[pos][0] != "{":
        pos += 1
    pos += 1
    vertices, edges, attributes = [], [], {}

    def read_attrs(p):
        attrs = {}
        p += 1
        while tokens[p][0] != "]":
            if tokens[p][0] == ",":
                p += 1
                continue
            key = tokens[p][1]
            value = tokens[p + 2][1]
            attrs[key] = value
            p += 3
        return attrs, p + 1

    while tokens[pos][0] != "}":
        kind, value = tokens[pos]
        if kind == ";":
            pos += 1
            continue
        if value in ("node", "edge", "graph") and tokens[pos + 1][0] == "[":
            _, pos = read_attrs(pos + 1)
            continue
        name = value
        pos += 1
        if tokens[pos][0] == "arrow":
            target = tokens[pos + 1][1]
            edges.append((name, target))
            pos += 2
            if tokens[pos][0] == "[":
                _, pos = read_attrs(pos)
            continue
        attrs = {}
        if tokens[pos][0] == "[":
            attrs, pos = read_attrs(pos)
        vertices.append(name)
        attributes[name] = attrs
    return vertices, edges, attributes
