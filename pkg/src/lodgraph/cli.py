"""Command-line interface.

Subcommands::

  analyze      full pipeline, JSON report
  stats        connectivity, degree and correlation sections only
  communities  one detector, contingency table (CSV) or test result (JSON)
  pagerank     top-k PageRank table
  export       DOT/GraphML with colours, sizes and layout
  validate     diff a report against a golden fixture

Exit codes: 0 success, 1 analysis or input error, 2 usage error,
3 validation found discrepancies.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click

from . import __version__
from .centrality import pagerank as compute_pagerank
from .centrality import top_k_central
from .community import ALGORITHMS, detect, modularity
from .exceptions import LodGraphError
from .export import export_graph
from .golden import load_fixture, mint_fixture, validate
from .graph import VertexMetadata, load_edge_list, load_metadata, undirected_view
from .layout import layout_fruchterman_reingold
from .metadata import contingency_table
from .report import AnalysisConfig, AnalysisReport, _with_path, analyze
from .stats import chi_square_independence

EXIT_ANALYSIS = 1
EXIT_DISCREPANCY = 3

_STATS_SECTIONS = ("graph_summary", "scc_summary", "distance_summary", "degree_tables",
                   "degree_histograms", "power_law", "degree_correlation", "hub", "assortativity")


def _fail_on_analysis_error(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except LodGraphError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_ANALYSIS)
    return wrapper


def _emit(payload, out):
    if isinstance(payload, str):
        payload = payload.encode("utf-8")
    if out is None:
        click.echo(payload, nl=False)
    else:
        with open(out, "wb") as fh:
            fh.write(payload)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _load(graph_path, metadata_path):
    graph = _with_path(load_edge_list, graph_path)
    metadata = None
    if metadata_path is not None:
        metadata = _with_path(load_metadata, metadata_path, graph)
    return graph, metadata


graph_option = click.option("--graph", "graph_path", required=True,
                            type=click.Path(exists=True, dir_okay=False),
                            help="Edge list: one 'source<TAB>target' per line.")
metadata_option = click.option("--metadata", "metadata_path", default=None,
                               type=click.Path(exists=True, dir_okay=False),
                               help="CSV with columns id,content,triples.")
out_option = click.option("--out", default=None, type=click.Path(dir_okay=False),
                          help="Write here instead of stdout.")


def pagerank_options(fn):
    fn = click.option("--damping", default=0.85, show_default=True, type=click.FloatRange(0, 1, max_open=True))(fn)
    fn = click.option("--tolerance", default=1e-12, show_default=True, type=click.FloatRange(0, min_open=True))(fn)
    fn = click.option("--max-iterations", default=200, show_default=True, type=click.IntRange(1))(fn)
    fn = click.option("--dangling-policy", default="uniform", show_default=True,
                      type=click.Choice(["uniform", "teleport-only"]))(fn)
    return fn


def community_options(fn):
    fn = click.option("--walk-length", default=4, show_default=True, type=click.IntRange(1),
                      help="Walktrap random-walk length.")(fn)
    fn = click.option("--spins", default=25, show_default=True, type=click.IntRange(2),
                      help="Spinglass upper bound on communities.")(fn)
    fn = click.option("--seed", default=42, show_default=True, type=int, help="Spinglass seed.")(fn)
    return fn


@click.group()
@click.version_option(__version__, prog_name="lodgraph")
def cli():
    """Structural analysis of a directed data-set link graph."""


@cli.command("analyze")
@graph_option
@metadata_option
@pagerank_options
@community_options
@click.option("--algorithm", "algorithms", multiple=True, type=click.Choice(ALGORITHMS),
              help="Restrict community detection (repeatable). Default: all four.")
@click.option("--mc-seed", default=1009, show_default=True, type=int)
@click.option("--mc-shuffles", default=100_000, show_default=True, type=click.IntRange(1))
@click.option("--directed-reachable", is_flag=True,
              help="Average distances over directed reachable ordered pairs.")
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@out_option
@_fail_on_analysis_error
def analyze_cmd(graph_path, metadata_path, damping, tolerance, max_iterations, dangling_policy,
                walk_length, spins, seed, algorithms, mc_seed, mc_shuffles, directed_reachable, fmt, out):
    """Run the full pipeline and print the JSON report."""
    config = AnalysisConfig(damping=damping, tolerance=tolerance, max_iterations=max_iterations,
                            dangling_policy=dangling_policy, walk_length=walk_length, spins=spins,
                            spinglass_seed=seed, mc_seed=mc_seed, mc_shuffles=mc_shuffles,
                            directed_reachable=directed_reachable,
                            algorithms=tuple(algorithms) or ALGORITHMS)
    graph, metadata = _load(graph_path, metadata_path)
    _emit(analyze(graph, metadata, config).to_json(), out)


@cli.command("stats")
@graph_option
@click.option("--directed-reachable", is_flag=True)
@click.option("--format", "fmt", default="json", type=click.Choice(["json"]))
@out_option
@_fail_on_analysis_error
def stats_cmd(graph_path, directed_reachable, fmt, out):
    """Connectivity, degree, power-law and assortativity statistics."""
    graph, _ = _load(graph_path, None)
    report = analyze(graph, None, AnalysisConfig(directed_reachable=directed_reachable)).to_dict()
    _emit(_dump({k: report[k] for k in _STATS_SECTIONS}), out)


@cli.command("communities")
@graph_option
@metadata_option
@click.option("--algorithm", default="eigen", show_default=True, type=click.Choice(ALGORITHMS))
@community_options
@click.option("--mc-seed", default=1009, show_default=True, type=int)
@click.option("--mc-shuffles", default=100_000, show_default=True, type=click.IntRange(1))
@click.option("--format", "fmt", default="json", show_default=True, type=click.Choice(["json", "csv"]),
              help="csv: the label/community contingency table; json: partition and test result.")
@out_option
@_fail_on_analysis_error
def communities_cmd(graph_path, metadata_path, algorithm, walk_length, spins, seed, mc_seed,
                    mc_shuffles, fmt, out):
    """Detect communities and test them against content labels."""
    if fmt == "csv" and metadata_path is None:
        raise click.UsageError("--format csv needs --metadata")
    graph, metadata = _load(graph_path, metadata_path)
    view = undirected_view(graph)
    part = detect(view, algorithm, walk_length=walk_length, spins=spins, seed=seed)
    table = contingency_table(part, metadata, view.vertices) if metadata is not None else None
    if fmt == "csv":
        _emit(table.to_csv(), out)
        return
    result = {
        "algorithm": algorithm,
        "n_communities": part.n_communities,
        "modularity": modularity(view, part),
        "membership": dict(zip(view.vertices, part.assignment)),
        "chi_square": None,
    }
    if table is not None:
        chi = chi_square_independence(table, n_shuffles=mc_shuffles, seed=mc_seed)
        result["contingency"] = table.to_dict()
        result["chi_square"] = {
            "statistic": chi.statistic,
            "degrees_of_freedom": chi.degrees_of_freedom,
            "p_value": chi.p_value,
            "sparse": chi.sparse,
            "monte_carlo_p_value": chi.monte_carlo_p_value,
            "n_shuffles": chi.n_shuffles,
        }
    _emit(_dump(result), out)


@cli.command("pagerank")
@graph_option
@pagerank_options
@click.option("--top", default=15, show_default=True, type=click.IntRange(1))
@click.option("--format", "fmt", default="json", show_default=True, type=click.Choice(["json", "csv"]))
@out_option
@_fail_on_analysis_error
def pagerank_cmd(graph_path, damping, tolerance, max_iterations, dangling_policy, top, fmt, out):
    """Rank data sets by PageRank."""
    graph, _ = _load(graph_path, None)
    ranks = compute_pagerank(graph, damping, tolerance, max_iterations, dangling_policy)
    rows = top_k_central(ranks, min(top, graph.n_vertices))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["rank", "vertex", "score"])
        for i, (v, s) in enumerate(rows, 1):
            writer.writerow([i, v, f"{s:.12g}"])
        _emit(buf.getvalue(), out)
    else:
        _emit(_dump({"damping": damping, "dangling_policy": dangling_policy,
                     "iterations": ranks.iterations_used, "residual": ranks.residual,
                     "top": [[v, s] for v, s in rows]}), out)


@cli.command("export")
@graph_option
@metadata_option
@click.option("--algorithm", default="eigen", show_default=True, type=click.Choice(ALGORITHMS))
@community_options
@pagerank_options
@click.option("--layout-seed", default=7, show_default=True, type=int)
@click.option("--layout-iterations", default=500, show_default=True, type=click.IntRange(1))
@click.option("--format", "fmt", default="dot", show_default=True, type=click.Choice(["dot", "graphml"]))
@out_option
@_fail_on_analysis_error
def export_cmd(graph_path, metadata_path, algorithm, walk_length, spins, seed, damping, tolerance,
               max_iterations, dangling_policy, layout_seed, layout_iterations, fmt, out):
    """Write the graph coloured by community and sized by PageRank."""
    graph, metadata = _load(graph_path, metadata_path)
    view = undirected_view(graph)
    part = detect(view, algorithm, walk_length=walk_length, spins=spins, seed=seed) if graph.n_edges else None
    ranks = compute_pagerank(graph, damping, tolerance, max_iterations, dangling_policy)
    layout = layout_fruchterman_reingold(view, layout_iterations, layout_seed)
    if metadata is not None:
        # vertices without a metadata row are exported without content attributes
        metadata = {v: metadata.get(v, VertexMetadata()) for v in graph.vertices}
    _emit(export_graph(graph, part, ranks, layout, fmt, metadata), out)


@cli.command("validate")
@click.option("--report", "report_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="JSON report written by 'analyze'.")
@click.option("--graph", "graph_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="Analyse this graph instead of reading a report.")
@metadata_option
@click.option("--golden", "golden_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="Fixture file. Default: the bundled published values.")
@click.option("--include-soft", is_flag=True, help="Also check soft (implementation-dependent) entries.")
@click.option("--mint", is_flag=True, help="Print a fixture minted from the report instead of validating.")
@out_option
@_fail_on_analysis_error
def validate_cmd(report_path, graph_path, metadata_path, golden_path, include_soft, mint, out):
    """Diff a report against the golden fixture; exit 3 on any discrepancy."""
    if (report_path is None) == (graph_path is None):
        raise click.UsageError("give exactly one of --report or --graph")
    if report_path is not None:
        with open(report_path, encoding="utf-8") as fh:
            report = AnalysisReport.from_json(fh.read())
    else:
        graph, metadata = _load(graph_path, metadata_path)
        report = analyze(graph, metadata)
    if mint:
        _emit(_dump(mint_fixture(report).to_dict()), out)
        return
    fixture = load_fixture(golden_path)
    found = validate(report, fixture, include_soft=include_soft)
    _emit(_dump({"fixture": fixture.name, "checked": len(fixture.entries),
                 "discrepancies": [d.to_dict() for d in found]}), out)
    if found:
        sys.exit(EXIT_DISCREPANCY)


def main():
    cli(prog_name="lodgraph")


if __name__ == "__main__":
    main()
