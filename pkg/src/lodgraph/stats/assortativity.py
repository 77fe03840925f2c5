"""Degree assortativity over per-edge endpoint vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import EmptyEdgeSet, TooFewSamples
from ..graph import DirectedGraph
from .correlation import CorrelationResult, correlate

ORIENTATIONS = ("directed", "symmetrized")


@dataclass(frozen=True)
class EdgeEndpointVectors:
    tail_degrees: np.ndarray
    head_degrees: np.ndarray

    def __len__(self):
        return len(self.tail_degrees)


def endpoint_vectors(
    graph: DirectedGraph, direction: str = "total", orientation: str = "directed"
) -> EdgeEndpointVectors:
    """Degree of the tail and head of every edge.

    With ``orientation="symmetrized"`` each edge is appended a second time
    with its endpoints swapped.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    if graph.n_edges == 0:
        raise EmptyEdgeSet("graph has no edges")
    deg = graph.degrees(direction).astype(float)
    e = np.asarray(graph.edges, dtype=np.int64)
    tail = deg[e[:, 0]]
    head = deg[e[:, 1]]
    if orientation == "symmetrized":
        tail, head = np.concatenate([tail, head]), np.concatenate([head, tail])
    return EdgeEndpointVectors(tail, head)


def assortativity(
    graph: DirectedGraph,
    direction: str = "total",
    method: str = "pearson",
    orientation: str = "directed",
) -> CorrelationResult:
    if graph.n_edges < 3:
        raise TooFewSamples(f"assortativity needs at least 3 edges, got {graph.n_edges}")
    vec = endpoint_vectors(graph, direction, orientation)
    return correlate(vec.tail_degrees, vec.head_degrees, method)
