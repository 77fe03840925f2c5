"""Input validation helpers shared by the estimators and the functional API."""

from __future__ import annotations

import numpy as np

from .exceptions import LengthMismatch
from .graph import DirectedGraph, UndirectedView, undirected_view


def _graph_from_array(X) -> DirectedGraph:
    a = np.asarray(X)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    if np.any(np.diag(a) != 0):
        raise ValueError("adjacency matrix has self-loops on the diagonal")
    n = a.shape[0]
    names = tuple(str(i) for i in range(n))
    src, dst = np.nonzero(a)
    return DirectedGraph(names, tuple(zip(src.tolist(), dst.tolist())))


def check_graph(X) -> DirectedGraph:
    """Coerce ``X`` to a :class:`DirectedGraph`.

    Accepts a DirectedGraph, an UndirectedView (its base graph is returned),
    or a square adjacency array whose nonzero ``[i, j]`` entries are edges
    ``i -> j``.
    """
    if isinstance(X, DirectedGraph):
        return X
    if isinstance(X, UndirectedView):
        return X.base
    return _graph_from_array(X)


def check_view(X) -> UndirectedView:
    """Coerce ``X`` to an :class:`UndirectedView`."""
    if isinstance(X, UndirectedView):
        return X
    return undirected_view(check_graph(X))


def check_random_state(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def check_paired(x, y):
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise LengthMismatch(f"length mismatch: {x.size} vs {y.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("inputs contain non-finite values")
    return x, y
