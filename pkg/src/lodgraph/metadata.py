"""Content-label versus community contingency tables and their chi-square test."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .community import detect
from .community.partition import Partition
from .exceptions import NoLabeledVertices
from .graph import UndirectedView
from .stats.chisquare import ChiSquareResult, chi_square_independence


@dataclass(frozen=True)
class ContingencyTable:
    row_labels: tuple
    column_labels: tuple
    counts: np.ndarray

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["content"] + [str(c) for c in self.column_labels])
        for label, row in zip(self.row_labels, self.counts.tolist()):
            writer.writerow([label] + [int(x) for x in row])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "rows": list(self.row_labels),
            "columns": [int(c) for c in self.column_labels],
            "counts": [[int(x) for x in row] for row in self.counts.tolist()],
        }


def contingency_table(partition: Partition, metadata: Mapping, vertices) -> ContingencyTable:
    """Cross-tabulate content labels against community ids.

    ``vertices`` gives the graph's vertex order (the partition is indexed by
    it). Unlabelled vertices are left out. Rows are sorted labels, columns
    are every community id of the partition.
    """
    labels = {}
    for i, name in enumerate(vertices):
        meta = metadata.get(name)
        if meta is not None and meta.content_label is not None:
            labels[i] = meta.content_label
    if not labels:
        raise NoLabeledVertices("no vertex carries a content label")
    rows = tuple(sorted(set(labels.values())))
    cols = tuple(range(partition.n_communities))
    row_index = {lab: r for r, lab in enumerate(rows)}
    counts = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, lab in labels.items():
        counts[row_index[lab], partition.assignment[i]] += 1
    return ContingencyTable(rows, cols, counts)


def label_community_significance(view: UndirectedView, metadata: Mapping, algorithm: str = "eigen",
                                 walk_length: int = 4, spins: int = 25, gamma: float = 1.0,
                                 seed: int = 42, monte_carlo: bool = False, n_shuffles: int = 100_000,
                                 mc_seed: int = 1009):
    """Detect communities, tabulate labels against them and test independence.

    Returns ``(table, chi_square_result)``.
    """
    partition = detect(view, algorithm, walk_length=walk_length, spins=spins, gamma=gamma, seed=seed)
    table = contingency_table(partition, metadata, view.vertices)
    result: ChiSquareResult = chi_square_independence(
        table, monte_carlo=monte_carlo, n_shuffles=n_shuffles, seed=mc_seed
    )
    return table, result
