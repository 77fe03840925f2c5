"""Structural analysis of directed data-set link graphs.

Connectivity and distance statistics, degree distributions and power-law
fits, degree and attribute assortativity, four community detectors with a
chi-square test against content labels, PageRank centrality, layout and
DOT/GraphML export, plus a JSON report and a golden-value validator.
"""

__version__ = "0.1.0"

from .centrality import PageRankVector, pagerank, top_k_central
from .community import ALGORITHMS, Partition, detect, modularity
from .exceptions import LodGraphError
from .export import export_graph
from .golden import load_fixture, mint_fixture, validate
from .graph import (
    DirectedGraph,
    UndirectedView,
    VertexMetadata,
    load_edge_list,
    load_metadata,
    undirected_view,
)
from .layout import layout_fruchterman_reingold
from .metadata import contingency_table, label_community_significance
from .report import AnalysisConfig, AnalysisReport, analyze, run_analysis

__all__ = [
    "ALGORITHMS",
    "AnalysisConfig",
    "AnalysisReport",
    "DirectedGraph",
    "LodGraphError",
    "PageRankVector",
    "Partition",
    "UndirectedView",
    "VertexMetadata",
    "analyze",
    "contingency_table",
    "detect",
    "export_graph",
    "label_community_significance",
    "layout_fruchterman_reingold",
    "load_edge_list",
    "load_fixture",
    "load_metadata",
    "mint_fixture",
    "modularity",
    "pagerank",
    "run_analysis",
    "top_k_central",
    "undirected_view",
    "validate",
]
