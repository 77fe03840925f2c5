"""Leading-eigenvector community detection (recursive modularity bisection)."""

from __future__ import annotations

import numpy as np

from ..exceptions import EmptyEdgeSet, NoConvergence
from ..graph import UndirectedView
from .partition import Partition

_SPLIT_EPS = 1e-10


def modularity_matrix(view: UndirectedView) -> np.ndarray:
    a = view.adjacency()
    k = a.sum(axis=1)
    return a - np.outer(k, k) / (2.0 * view.n_edges)


def _start_vector(n: int) -> np.ndarray:
    # all-ones plus a fixed irrational-stride perturbation to avoid symmetric stalls
    x = np.ones(n) + 1e-6 * ((np.arange(1, n + 1) * 0.6180339887498949) % 1.0)
    return x / np.linalg.norm(x)


def leading_eigenpair(b: np.ndarray, tol: float = 1e-10, max_iter: int = 100_000):
    """Algebraically largest eigenpair of a symmetric matrix by power iteration.

    The matrix is shifted by its maximum absolute row sum, which bounds the
    spectral radius, so the shifted spectrum is nonnegative and its dominant
    eigenvalue is the one sought.
    """
    n = b.shape[0]
    shift = float(np.abs(b).sum(axis=1).max())
    shifted = b + shift * np.eye(n)
    x = _start_vector(n)
    for _ in range(max_iter):
        y = shifted @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            # b == -shift * I on this subspace; any vector is an eigenvector
            return -shift, x
        y /= norm
        if np.linalg.norm(y - x) < tol:
            return float(y @ b @ y), y
        x = y
    raise NoConvergence(f"power iteration did not converge in {max_iter} iterations",
                        residual=float(np.linalg.norm(shifted @ x / np.linalg.norm(shifted @ x) - x)))


def detect_leading_eigenvector(view: UndirectedView, tol: float = 1e-10,
                               max_iter: int = 100_000) -> Partition:
    """Recursive spectral bisection of the modularity matrix.

    Each working community is split by the sign pattern of the leading
    eigenvector of its generalized modularity matrix (zero entries go to the
    positive side). A community is final when that eigenvalue is
    non-positive, the sign split is trivial, or the split's modularity gain
    is non-positive.
    """
    m = view.n_edges
    if m == 0:
        raise EmptyEdgeSet("leading eigenvector needs at least one edge")
    b_full = modularity_matrix(view)
    pending = [list(range(view.n_vertices))]
    final = []
    while pending:
        group = pending.pop(0)
        if len(group) < 2:
            final.append(group)
            continue
        idx = np.asarray(group)
        bg = b_full[np.ix_(idx, idx)].copy()
        bg[np.diag_indices_from(bg)] -= bg.sum(axis=1)
        value, vec = leading_eigenpair(bg, tol, max_iter)
        if value <= _SPLIT_EPS:
            final.append(group)
            continue
        s = np.where(vec >= 0.0, 1.0, -1.0)
        if abs(s.sum()) == len(group):
            final.append(group)
            continue
        gain = float(s @ bg @ s) / (4.0 * m)
        if gain <= _SPLIT_EPS:
            final.append(group)
            continue
        pending.append([v for v, sign in zip(group, s) if sign > 0])
        pending.append([v for v, sign in zip(group, s) if sign < 0])
    final.sort(key=min)
    return Partition.from_groups(final, view.n_vertices)

