"""Connectivity and distance statistics."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .exceptions import DisconnectedGraph, EmptyGraph
from .graph import DirectedGraph, UndirectedView, induced_subgraph, undirected_view


@dataclass(frozen=True)
class ComponentDecomposition:
    """Vertex-to-component assignment.

    Component ids are contiguous from 0 and ordered by the smallest vertex
    index each component contains.
    """

    assignment: tuple
    sizes: tuple

    @property
    def n_components(self) -> int:
        return len(self.sizes)

    def members(self) -> list:
        groups = [[] for _ in range(self.n_components)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return groups


@dataclass(frozen=True)
class DistanceSummary:
    diameter: int
    average_path_length: float
    pair_count: int


def _relabel_by_first_vertex(labels) -> tuple:
    mapping = {}
    out = []
    for lab in labels:
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out.append(mapping[lab])
    return tuple(out)


def _decomposition(labels) -> ComponentDecomposition:
    assignment = _relabel_by_first_vertex(labels)
    counts = np.bincount(assignment, minlength=max(assignment, default=-1) + 1) if assignment else []
    return ComponentDecomposition(assignment, tuple(sorted((int(c) for c in counts), reverse=True)))


def strongly_connected_components(graph: DirectedGraph) -> ComponentDecomposition:
    """Iterative Tarjan; no recursion, O(|V| + |E|)."""
    n = graph.n_vertices
    succ = graph.successors()
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comp = [-1] * n
    counter = 0
    n_comp = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # frames of (vertex, position in successor list)
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            nbrs = succ[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                w = nbrs[pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1

    return _decomposition(comp)


def weakly_connected_components(view) -> ComponentDecomposition:
    if isinstance(view, DirectedGraph):
        view = undirected_view(view)
    adj = view.neighbors()
    comp = [-1] * view.n_vertices
    c = 0
    for s in range(view.n_vertices):
        if comp[s] != -1:
            continue
        comp[s] = c
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] == -1:
                    comp[w] = c
                    queue.append(w)
        c += 1
    return _decomposition(comp)


def is_weakly_connected(graph: DirectedGraph) -> bool:
    if graph.n_vertices == 0:
        raise EmptyGraph("connectivity is undefined for an empty graph")
    return weakly_connected_components(graph).n_components == 1


def is_strongly_connected(graph: DirectedGraph) -> bool:
    if graph.n_vertices == 0:
        raise EmptyGraph("connectivity is undefined for an empty graph")
    return strongly_connected_components(graph).n_components == 1


def _bfs(adj, source, n):
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == -1:
                dist[w] = du
                queue.append(w)
    return dist


def distance_summary(view: UndirectedView) -> DistanceSummary:
    """Diameter and mean hop distance over unordered vertex pairs.

    Raises
    ------
    DisconnectedGraph
        If some pair of vertices is mutually unreachable.
    """
    n = view.n_vertices
    if n == 0:
        raise EmptyGraph("distance summary of an empty graph")
    adj = view.neighbors()
    total = 0
    diameter = 0
    for s in range(n):
        dist = _bfs(adj, s, n)
        if -1 in dist:
            raise DisconnectedGraph(
                f"{view.vertices[s]!r} cannot reach {view.vertices[dist.index(-1)]!r}"
            )
        total += sum(dist)
        diameter = max(diameter, max(dist))
    pairs = n * (n - 1) // 2
    # ordered-pair sum counts each unordered pair twice
    avg = total / (2 * pairs) if pairs else 0.0
    return DistanceSummary(diameter, avg, pairs)


def component_distance_summaries(view: UndirectedView) -> list:
    """Per weakly connected component summaries, largest component first."""
    comps = weakly_connected_components(view).members()
    comps.sort(key=lambda m: (-len(m), m[0]))
    out = []
    for members in comps:
        sub = induced_subgraph(view.base, [view.vertices[i] for i in members])
        out.append(distance_summary(undirected_view(sub)))
    return out


def directed_reachable_summary(graph: DirectedGraph) -> DistanceSummary:
    """Sensitivity variant: directed hop distances over ordered reachable pairs."""
    n = graph.n_vertices
    if n == 0:
        raise EmptyGraph("distance summary of an empty graph")
    succ = graph.successors()
    total = 0
    pairs = 0
    diameter = 0
    for s in range(n):
        for d in _bfs(succ, s, n):
            if d > 0:
                total += d
                pairs += 1
                diameter = max(diameter, d)
    return DistanceSummary(diameter, total / pairs if pairs else 0.0, pairs)
