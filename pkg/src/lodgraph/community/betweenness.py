"""Edge betweenness (Brandes accumulation) and Girvan-Newman divisive clustering."""

from __future__ import annotations

from collections import deque

from ..exceptions import EmptyEdgeSet
from ..graph import UndirectedView
from .partition import Dendrogram, DendrogramStep, Partition, modularity


def _key(u, v):
    return (u, v) if u < v else (v, u)


def _accumulate(adj, sources, scores):
    """Add single-direction Brandes edge dependencies from each source."""
    for s in sources:
        stack = []
        preds = {s: []}
        sigma = {s: 1.0}
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    sigma[w] = 0.0
                    preds[w] = []
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = dict.fromkeys(stack, 0.0)
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                c = sigma[v] * coeff
                scores[_key(v, w)] += c
                delta[v] += c


def edge_betweenness(view: UndirectedView) -> dict:
    """Shortest-path edge betweenness over unordered vertex pairs.

    Returns ``{(i, j): score}`` in the view's edge order. Each pair's unit
    of credit is split equally among its shortest paths.
    """
    adj = view.neighbors()
    scores = {e: 0.0 for e in view.edges}
    _accumulate(adj, range(view.n_vertices), scores)
    # every unordered pair was counted from both ends
    return {e: s / 2.0 for e, s in scores.items()}


def _component_of(adj, start):
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _components(adj):
    labels = [-1] * len(adj)
    c = 0
    for s in range(len(adj)):
        if labels[s] == -1:
            for v in _component_of(adj, s):
                labels[v] = c
            c += 1
    return labels, c


def detect_girvan_newman(view: UndirectedView):
    """Remove the highest-betweenness edge until none remain.

    Betweenness is recomputed after each removal (only inside the affected
    component). Ties go to the edge listed first in ``view.edges``. The
    partition is recorded whenever the component count grows, and the
    recorded partition with the highest modularity is returned together with
    the full :class:`Dendrogram`.
    """
    if view.n_edges == 0:
        raise EmptyEdgeSet("girvan-newman needs at least one edge")
    order = {e: i for i, e in enumerate(view.edges)}
    adj = [set(nb) for nb in view.neighbors()]
    sorted_adj = [sorted(a) for a in adj]
    scores = {e: 0.0 for e in view.edges}
    _accumulate(sorted_adj, range(view.n_vertices), scores)
    scores = {e: s / 2.0 for e, s in scores.items()}

    labels, n_comp = _components(sorted_adj)
    first = Partition.from_labels(labels)
    steps = [DendrogramStep(0, first, modularity(view, first))]
    remaining = len(scores)
    step = 0
    while remaining:
        best_edge = None
        best_val = -1.0
        for e, val in scores.items():
            if val > best_val + 1e-9 or (abs(val - best_val) <= 1e-9 and order[e] < order[best_edge]):
                best_edge, best_val = e, val
        u, v = best_edge
        adj[u].discard(v)
        adj[v].discard(u)
        del scores[best_edge]
        remaining -= 1
        step += 1
        sorted_adj[u] = sorted(adj[u])
        sorted_adj[v] = sorted(adj[v])

        affected = _component_of(sorted_adj, u) | _component_of(sorted_adj, v)
        for e in scores:
            if e[0] in affected:
                scores[e] = 0.0
        _accumulate(sorted_adj, sorted(affected), scores)
        for e in scores:
            if e[0] in affected:
                scores[e] /= 2.0

        labels, count = _components(sorted_adj)
        if count > n_comp:
            n_comp = count
            part = Partition.from_labels(labels)
            steps.append(DendrogramStep(step, part, modularity(view, part)))

    dendrogram = Dendrogram(tuple(steps))
    return dendrogram.best().partition, dendrogram
