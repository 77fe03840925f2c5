"""Graph builders shared by the test modules."""

import itertools


from lodgraph.graph import DirectedGraph, VertexMetadata


def names(n):
    return tuple(f"v{i:02d}" for i in range(n))


def digraph(n, edges):
    return DirectedGraph(names(n), tuple(edges))


def random_digraph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return digraph(n, edges)


def undirected_graph(n, pairs):
    """Directed graph whose undirected view has exactly ``pairs``."""
    return digraph(n, [(min(u, v), max(u, v)) for u, v in pairs])


def is_connected(n, pairs):
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def random_connected_pairs(rng, n, p):
    while True:
        pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        if pairs and is_connected(n, pairs):
            return pairs


def two_cliques_pairs(size=4):
    left = list(itertools.combinations(range(size), 2))
    right = [(u + size, v + size) for u, v in left]
    return left + right + [(size - 1, size)]


def planted_clique_pairs(rng, n, p_out=0.1):
    """Two cliques of sizes n//2 and n - n//2 joined by sparse random bridges.

    Samples are redrawn until the graph is connected and every vertex has
    more neighbours inside its clique than outside, so the planted split is
    a genuine community structure for each vertex.
    """
    half = n // 2
    while True:
        pairs = []
        inside = [0] * n
        outside = [0] * n
        for u, v in itertools.combinations(range(n), 2):
            same = (u < half) == (v < half)
            if same or rng.random() < p_out:
                pairs.append((u, v))
                for w in (u, v):
                    (inside if same else outside)[w] += 1
        if is_connected(n, pairs) and all(i > o for i, o in zip(inside, outside)):
            return pairs


def labelled(graph, labels=None, triples=None):
    labels = labels or {}
    triples = triples or {}
    return {v: VertexMetadata(labels.get(v), triples.get(v)) for v in graph.vertices}


def fixture_report(fixture) -> dict:
    """Nested report dict that holds exactly the fixture's expected values."""
    out: dict = {}
    for e in fixture.entries:
        node = out
        path = ["mle" if p == "*" else p for p in e.path]
        for part in path[:-1]:
            node = node.setdefault(part, {})
        node[path[-1]] = e.value
    return out


def random_digraph_exact(rng, n, m):
    """Uniform digraph on n vertices with exactly m edges."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    idx = rng.choice(len(pairs), size=m, replace=False)
    return digraph(n, sorted(pairs[i] for i in idx))
