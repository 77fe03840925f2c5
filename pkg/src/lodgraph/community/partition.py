"""Partitions, dendrograms and the modularity objective."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..exceptions import EmptyEdgeSet
from ..graph import UndirectedView


@dataclass(frozen=True)
class Partition:
    """Total vertex-to-community assignment in canonical form.

    Community ids are contiguous and ordered by the smallest vertex index
    they contain. Construct through :meth:`from_labels` to canonicalize
    arbitrary labels.
    """

    assignment: tuple

    def __post_init__(self):
        seen = -1
        for c in self.assignment:
            if c > seen + 1:
                raise ValueError("assignment is not canonical; use Partition.from_labels")
            seen = max(seen, c)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        mapping = {}
        out = []
        for lab in labels:
            if lab not in mapping:
                mapping[lab] = len(mapping)
            out.append(mapping[lab])
        return cls(tuple(out))

    @classmethod
    def from_groups(cls, groups, n: int) -> "Partition":
        labels = [-1] * n
        for c, members in enumerate(groups):
            for v in members:
                labels[v] = c
        if -1 in labels:
            raise ValueError("groups do not cover every vertex")
        return cls.from_labels(labels)

    @property
    def n_communities(self) -> int:
        return max(self.assignment, default=-1) + 1

    def __len__(self):
        return len(self.assignment)

    def groups(self) -> list:
        out = [[] for _ in range(self.n_communities)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def labels(self) -> np.ndarray:
        return np.asarray(self.assignment, dtype=np.int64)


@dataclass(frozen=True)
class DendrogramStep:
    step: int
    partition: Partition
    modularity: float


@dataclass(frozen=True)
class Dendrogram:
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def best(self) -> DendrogramStep:
        """Step with maximal modularity; the earliest wins ties."""
        best = self.steps[0]
        for s in self.steps[1:]:
            if s.modularity > best.modularity + 1e-12:
                best = s
        return best


def modularity(view: UndirectedView, partition) -> float:
    """Newman modularity of an undirected, unweighted simple graph."""
    m = view.n_edges
    if m == 0:
        raise EmptyEdgeSet("modularity is undefined without edges")
    labels = partition.assignment if isinstance(partition, Partition) else tuple(partition)
    if len(labels) != view.n_vertices:
        raise ValueError("partition does not cover the graph's vertices")
    k = max(labels) + 1
    intra = np.zeros(k)
    deg = np.zeros(k)
    for i, j in view.edges:
        ci, cj = labels[i], labels[j]
        deg[ci] += 1
        deg[cj] += 1
        if ci == cj:
            intra[ci] += 1
    return float(np.sum(intra / m - (deg / (2.0 * m)) ** 2))
