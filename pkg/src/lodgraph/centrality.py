"""PageRank centrality, rankings, and triple-count correlations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .exceptions import EmptyGraph, NoConvergence, OutOfRange, TooFewEdges, TooFewSamples
from .graph import DirectedGraph, induced_subgraph
from .stats.correlation import CorrelationResult, correlate

DANGLING_POLICIES = ("uniform", "teleport-only")


@dataclass(frozen=True)
class PageRankVector:
    scores: dict
    damping: float
    iterations_used: int
    residual: float

    def as_array(self, vertices) -> np.ndarray:
        return np.array([self.scores[v] for v in vertices])


def pagerank(graph: DirectedGraph, damping: float = 0.85, tolerance: float = 1e-12,
             max_iterations: int = 200, dangling_policy: str = "uniform",
             callback=None) -> PageRankVector:
    """Power iteration for the damped random surfer on the directed graph.

    ``dangling_policy="uniform"`` spreads the rank of vertices without
    out-edges evenly over all vertices. ``"teleport-only"`` drops that mass
    from the link-following step and renormalizes, so it reaches the graph
    only through teleportation. Iteration stops when the L1 change falls
    below ``tolerance``. ``callback(iteration, scores)``, when given, sees a
    copy of the scores after every update.
    """
    n = graph.n_vertices
    if n == 0:
        raise EmptyGraph("pagerank of an empty graph")
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must lie in (0, 1), got {damping}")
    if dangling_policy not in DANGLING_POLICIES:
        raise ValueError(f"dangling_policy must be one of {DANGLING_POLICIES}, got {dangling_policy!r}")

    out_deg = graph.out_degrees().astype(float)
    e = np.asarray(graph.edges, dtype=np.int64).reshape(-1, 2)
    src, dst = e[:, 0], e[:, 1]
    weight = np.zeros(len(e))
    if len(e):
        weight = 1.0 / out_deg[src]
    dangling = out_deg == 0

    x = np.full(n, 1.0 / n)
    residual = np.inf
    for it in range(1, max_iterations + 1):
        follow = np.bincount(dst, weights=x[src] * weight, minlength=n)
        if dangling_policy == "uniform":
            new = (1.0 - damping) / n + damping * (follow + x[dangling].sum() / n)
        else:
            new = (1.0 - damping) / n + damping * follow
        new /= new.sum()
        residual = float(np.abs(new - x).sum())
        x = new
        if callback is not None:
            callback(it, x.copy())
        if residual < tolerance:
            break
    else:
        raise NoConvergence(f"pagerank did not converge in {max_iterations} iterations "
                            f"(residual {residual:.3e})", residual=residual)
    return PageRankVector(dict(zip(graph.vertices, x.tolist())), damping, it, residual)


def top_k_central(ranks: PageRankVector, k: int) -> list:
    """Highest-scoring vertices; equal scores are ordered by name."""
    if not 1 <= k <= len(ranks.scores):
        raise OutOfRange(f"k must lie in [1, {len(ranks.scores)}], got {k}")
    ordered = sorted(ranks.scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return ordered[:k]


def centrality_attribute_correlation(ranks: PageRankVector, attribute: Mapping,
                                     method: str = "spearman") -> CorrelationResult:
    """Correlate scores with an attribute over the vertices that have it."""
    names = [v for v in ranks.scores if attribute.get(v) is not None]
    if len(names) < 3:
        raise TooFewSamples(f"need at least 3 vertices with the attribute, got {len(names)}")
    x = [ranks.scores[v] for v in names]
    y = [float(attribute[v]) for v in names]
    return correlate(x, y, method)


def attribute_subgraph(graph: DirectedGraph, attribute: Mapping) -> DirectedGraph:
    return induced_subgraph(graph, [v for v in graph.vertices if attribute.get(v) is not None])


def attribute_endpoint_vectors(graph: DirectedGraph, attribute: Mapping):
    """Attribute value at the tail and head of every edge of the attribute subgraph."""
    sub = attribute_subgraph(graph, attribute)
    values = np.array([float(attribute[v]) for v in sub.vertices])
    e = np.asarray(sub.edges, dtype=np.int64).reshape(-1, 2)
    return sub, values[e[:, 0]], values[e[:, 1]]


def attribute_assortativity(graph: DirectedGraph, attribute: Mapping,
                            method: str = "pearson") -> CorrelationResult:
    """Assortative mixing by a numeric vertex attribute.

    Only the subgraph induced on vertices carrying the attribute is used.
    """
    sub, tail, head = attribute_endpoint_vectors(graph, attribute)
    if sub.n_edges < 3:
        raise TooFewEdges(f"attribute subgraph has {sub.n_edges} edges; need at least 3")
    return correlate(tail, head, method)
