"""End-to-end analysis pipeline and its JSON report."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import metrics
from .centrality import (
    attribute_assortativity,
    attribute_subgraph,
    centrality_attribute_correlation,
    pagerank,
    top_k_central,
)
from .community import ALGORITHMS, detect, modularity
from .exceptions import DisconnectedGraph, LodGraphError
from .graph import DIRECTIONS, DirectedGraph, attribute_values, load_edge_list, load_metadata, undirected_view
from .metadata import contingency_table
from .stats import assortativity, chi_square_independence, correlate, degree_histogram, fit_power_law
from .stats.correlation import METHODS

FLOAT_DIGITS = 12


@dataclass
class AnalysisConfig:
    damping: float = 0.85
    tolerance: float = 1e-12
    max_iterations: int = 200
    dangling_policy: str = "uniform"
    walk_length: int = 4
    spins: int = 25
    gamma: float = 1.0
    spinglass_seed: int = 42
    layout_seed: int = 7
    layout_iterations: int = 500
    mc_seed: int = 1009
    mc_shuffles: int = 100_000
    degree_top_k: int = 11
    pagerank_top_k: int = 15
    x_min: int = 1
    directed_reachable: bool = False
    algorithms: tuple = field(default=ALGORITHMS)


@dataclass
class AnalysisReport:
    """Every computed statistic, as JSON-ready nested dicts in a fixed order."""

    config: dict
    graph_summary: dict
    scc_summary: dict
    distance_summary: dict
    degree_tables: dict
    degree_histograms: dict
    power_law: dict
    degree_correlation: dict
    hub: Optional[dict]
    assortativity: dict
    communities: Optional[dict]
    pagerank: dict
    triple_counts: Optional[dict]

    def to_dict(self) -> dict:
        return _round_floats(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**{k: data.get(k) for k in cls.__dataclass_fields__})

    @classmethod
    def from_json(cls, text) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def _round_floats(obj):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(f"{obj:.{FLOAT_DIGITS}g}")
    if isinstance(obj, dict):
        return {str(k): _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _corr(result) -> dict:
    return {"coefficient": result.coefficient, "p_value": result.p_value, "n": result.n}


def _try(fn, *args, **kwargs):
    # statistics that are undefined for a given graph are reported as null
    try:
        return fn(*args, **kwargs)
    except LodGraphError:
        return None


def _top_degrees(graph: DirectedGraph, direction: str, k: int) -> dict:
    """Top-``k`` vertices by degree, extended to include everyone tied with the k-th."""
    deg = graph.degrees(direction)
    order = sorted(range(graph.n_vertices), key=lambda i: (-deg[i], graph.vertices[i]))
    if not order:
        return {}
    cutoff = deg[order[min(k, len(order)) - 1]]
    return {graph.vertices[i]: int(deg[i]) for i in order if deg[i] >= cutoff}


def _distance_section(graph, view, config) -> dict:
    if config.directed_reachable:
        s = metrics.directed_reachable_summary(graph)
        return {"mode": "directed-reachable", "connected": None, "diameter": s.diameter,
                "average_path_length": s.average_path_length, "pair_count": s.pair_count,
                "components": None}
    try:
        s = metrics.distance_summary(view)
    except DisconnectedGraph:
        comps = metrics.component_distance_summaries(view)
        return {"mode": "undirected", "connected": False, "diameter": None,
                "average_path_length": None, "pair_count": None,
                "components": [asdict(c) for c in comps]}
    return {"mode": "undirected", "connected": True, "diameter": s.diameter,
            "average_path_length": s.average_path_length, "pair_count": s.pair_count,
            "components": None}


def _hub_section(graph, view) -> Optional[dict]:
    if graph.n_edges == 0:
        return None
    total = graph.degrees("total")
    hub = min(range(graph.n_vertices), key=lambda i: (-total[i], graph.vertices[i]))
    neighbours = view.neighbors()[hub]
    return {"vertex": graph.vertices[hub], "total_degree": int(total[hub]),
            "neighbor_total_degrees": sorted(int(total[j]) for j in neighbours)}


def _community_section(view, metadata, config) -> Optional[dict]:
    if metadata is None or view.n_edges == 0:
        return None
    if not any(m.content_label for m in metadata.values()):
        return None
    out = {}
    for alg in config.algorithms:
        part = detect(view, alg, walk_length=config.walk_length, spins=config.spins,
                      gamma=config.gamma, seed=config.spinglass_seed)
        table = contingency_table(part, metadata, view.vertices)
        chi = _try(chi_square_independence, table, n_shuffles=config.mc_shuffles, seed=config.mc_seed)
        out[alg] = {
            "n_communities": part.n_communities,
            "modularity": modularity(view, part),
            "membership": dict(zip(view.vertices, part.assignment)),
            "contingency": table.to_dict(),
            "chi_square": None if chi is None else {
                "statistic": chi.statistic,
                "degrees_of_freedom": chi.degrees_of_freedom,
                "p_value": chi.p_value,
                "sparse": chi.sparse,
                "monte_carlo_p_value": chi.monte_carlo_p_value,
                "n_shuffles": chi.n_shuffles,
            },
        }
    return out


def _triple_section(graph, metadata, ranks) -> Optional[dict]:
    if metadata is None:
        return None
    triples = attribute_values(metadata, "triple_count")
    present = [v for v in graph.vertices if triples.get(v) is not None]
    if not present:
        return None
    sub = attribute_subgraph(graph, triples)
    centrality = {}
    for method in ("spearman", "kendall"):
        r = _try(centrality_attribute_correlation, ranks, triples, method)
        centrality[method] = None if r is None else _corr(r)
    mixing = {}
    for method in METHODS:
        r = _try(attribute_assortativity, graph, triples, method)
        mixing[method] = None if r is None else _corr(r)
    return {"n_with_counts": len(present), "subgraph_vertices": sub.n_vertices,
            "subgraph_edges": sub.n_edges, "centrality": centrality, "assortativity": mixing}


def analyze(graph: DirectedGraph, metadata: Optional[dict] = None,
            config: Optional[AnalysisConfig] = None) -> AnalysisReport:
    """Run every analysis stage on an in-memory graph."""
    config = config or AnalysisConfig()
    view = undirected_view(graph)

    scc = metrics.strongly_connected_components(graph)
    graph_summary = {
        "vertices": graph.n_vertices,
        "edges": graph.n_edges,
        "weakly_connected": metrics.is_weakly_connected(graph),
        "strongly_connected": scc.n_components == 1,
    }
    scc_summary = {
        "count": scc.n_components,
        "sizes": list(scc.sizes),
        "nonsingleton_sizes": [s for s in scc.sizes if s > 1],
        "singletons": sum(1 for s in scc.sizes if s == 1),
    }

    degree_tables = {"k": config.degree_top_k,
                     "in": _top_degrees(graph, "in", config.degree_top_k),
                     "out": _top_degrees(graph, "out", config.degree_top_k)}
    histograms = {d: {str(k): v for k, v in degree_histogram(graph, d).entries.items()}
                  for d in DIRECTIONS}

    total = graph.degrees("total")
    power_law = {}
    for method in ("mle", "least_squares"):
        fit = _try(fit_power_law, total, config.x_min, method)
        power_law[method] = None if fit is None else {"alpha": fit.alpha, "x_min": fit.x_min, "n": fit.n}

    degree_correlation = {}
    for method in METHODS:
        r = _try(correlate, graph.in_degrees(), graph.out_degrees(), method)
        degree_correlation[method] = None if r is None else _corr(r)

    assort = {}
    for method in METHODS:
        assort[method] = {}
        for direction in DIRECTIONS:
            r = _try(assortativity, graph, direction, method)
            assort[method][direction] = None if r is None else _corr(r)

    ranks = pagerank(graph, config.damping, config.tolerance, config.max_iterations,
                     config.dangling_policy)
    top = top_k_central(ranks, min(config.pagerank_top_k, graph.n_vertices))
    pagerank_section = {
        "damping": ranks.damping,
        "dangling_policy": config.dangling_policy,
        "iterations": ranks.iterations_used,
        "residual": ranks.residual,
        "top": [[v, s] for v, s in top],
        "rank": {str(i + 1): v for i, (v, _) in enumerate(top)},
        "scores": dict(top),
    }

    cfg = asdict(config)
    cfg["algorithms"] = list(config.algorithms)
    return AnalysisReport(
        config=cfg,
        graph_summary=graph_summary,
        scc_summary=scc_summary,
        distance_summary=_distance_section(graph, view, config),
        degree_tables=degree_tables,
        degree_histograms=histograms,
        power_law=power_law,
        degree_correlation=degree_correlation,
        hub=_hub_section(graph, view),
        assortativity=assort,
        communities=_community_section(view, metadata, config),
        pagerank=pagerank_section,
        triple_counts=_triple_section(graph, metadata, ranks),
    )


def run_analysis(graph_path, metadata_path=None, config: Optional[AnalysisConfig] = None) -> AnalysisReport:
    """Load the input files and run :func:`analyze`.

    Ingestion errors are re-raised with the offending file name prepended.
    """
    graph = _with_path(load_edge_list, graph_path)
    metadata = None
    if metadata_path is not None:
        metadata = _with_path(load_metadata, metadata_path, graph)
    return analyze(graph, metadata, config)


def _with_path(loader, path, *args):
    try:
        return loader(path, *args)
    except LodGraphError as exc:
        exc.args = (f"{path}: {exc.args[0] if exc.args else exc}",) + exc.args[1:]
        raise
