"""Walktrap: agglomerative clustering on short random-walk distances."""

from __future__ import annotations

import numpy as np

from ..exceptions import EmptyEdgeSet
from ..graph import UndirectedView
from .partition import Dendrogram, DendrogramStep, Partition, modularity


def transition_power(view: UndirectedView, walk_length: int) -> tuple:
    """``P**t`` for the walk with a self-loop on every vertex, plus degrees.

    The self-loops follow the original method's convention; they keep the
    walk aperiodic and give isolated vertices a well-defined row.
    """
    a = view.adjacency() + np.eye(view.n_vertices)
    d = a.sum(axis=1)
    p = a / d[:, None]
    return np.linalg.matrix_power(p, walk_length), d


def detect_walktrap(view: UndirectedView, walk_length: int = 4):
    """Ward-style merging of adjacent communities by walk distance.

    At each step the pair of adjacent communities with the smallest
    increase in mean squared walk distance,
    ``|C1||C2| / (|C1|+|C2|) * r(C1, C2)**2 / n``, is merged (ties broken by
    lowest community ids). Disconnected graphs simply end with one community
    per component. Returns the maximal-modularity cut and the dendrogram.
    """
    if walk_length < 1:
        raise ValueError(f"walk_length must be positive, got {walk_length}")
    if view.n_edges == 0:
        raise EmptyEdgeSet("walktrap needs at least one edge")
    n = view.n_vertices
    pt, d = transition_power(view, walk_length)
    scaled = pt / np.sqrt(d)[None, :]

    # communities keyed by id; a new id is allocated for each merge
    members = {i: [i] for i in range(n)}
    probs = {i: scaled[i].copy() for i in range(n)}
    adjacent = {i: set() for i in range(n)}
    for i, j in view.edges:
        adjacent[i].add(j)
        adjacent[j].add(i)

    def cost(c1, c2):
        n1, n2 = len(members[c1]), len(members[c2])
        diff = probs[c1] - probs[c2]
        return (n1 * n2 / (n1 + n2)) * float(diff @ diff) / n

    costs = {}
    for i, j in view.edges:
        costs[(min(i, j), max(i, j))] = cost(i, j)

    labels = list(range(n))
    part = Partition.from_labels(labels)
    steps = [DendrogramStep(0, part, modularity(view, part))]
    next_id = n
    step = 0
    while costs:
        (c1, c2), _ = min(costs.items(), key=lambda kv: (kv[1], kv[0]))
        new = next_id
        next_id += 1
        n1, n2 = len(members[c1]), len(members[c2])
        members[new] = members.pop(c1) + members.pop(c2)
        probs[new] = (n1 * probs.pop(c1) + n2 * probs.pop(c2)) / (n1 + n2)
        neighbours = (adjacent.pop(c1) | adjacent.pop(c2)) - {c1, c2}
        adjacent[new] = neighbours
        for c in neighbours:
            adjacent[c] -= {c1, c2}
            adjacent[c].add(new)
        costs = {k: v for k, v in costs.items() if c1 not in k and c2 not in k}
        for c in neighbours:
            costs[(min(c, new), max(c, new))] = cost(c, new)

        for v in members[new]:
            labels[v] = new
        step += 1
        part = Partition.from_labels(labels)
        steps.append(DendrogramStep(step, part, modularity(view, part)))

    dendrogram = Dendrogram(tuple(steps))
    return dendrogram.best().partition, dendrogram
