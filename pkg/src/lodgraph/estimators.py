"""scikit-learn style estimators wrapping the functional API.

Every estimator accepts a :class:`~lodgraph.graph.DirectedGraph`, an
:class:`~lodgraph.graph.UndirectedView` or a square adjacency array as
``X``, so the algorithms can sit inside pipelines, ``clone`` and
``get_params``/``set_params`` like any other estimator.

>>> from lodgraph.estimators import LeadingEigenvector
>>> labels = LeadingEigenvector().fit_predict(adjacency)  # doctest: +SKIP
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .centrality import pagerank
from .community import (
    detect_girvan_newman,
    detect_leading_eigenvector,
    detect_spinglass,
    detect_walktrap,
    modularity,
)
from .layout import layout_fruchterman_reingold
from .stats.powerlaw import fit_power_law
from .validation import check_graph, check_view


class _CommunityDetector(ClusterMixin, BaseEstimator):
    def _detect(self, view):
        raise NotImplementedError

    def fit(self, X, y=None):
        view = check_view(X)
        result = self._detect(view)
        if isinstance(result, tuple):
            self.partition_, self.dendrogram_ = result
        else:
            self.partition_ = result
        self.labels_ = self.partition_.labels()
        self.n_communities_ = self.partition_.n_communities
        self.modularity_ = modularity(view, self.partition_)
        return self


class LeadingEigenvector(_CommunityDetector):
    def __init__(self, tol=1e-10, max_iter=100_000):
        self.tol = tol
        self.max_iter = max_iter

    def _detect(self, view):
        return detect_leading_eigenvector(view, self.tol, self.max_iter)


class Walktrap(_CommunityDetector):
    def __init__(self, walk_length=4):
        self.walk_length = walk_length

    def _detect(self, view):
        return detect_walktrap(view, self.walk_length)


class EdgeBetweenness(_CommunityDetector):
    def _detect(self, view):
        return detect_girvan_newman(view)


class Spinglass(_CommunityDetector):
    def __init__(self, spins=25, gamma=1.0, seed=42, start_temp=1.0, stop_temp=0.01,
                 cooling=0.99, restarts=1):
        self.spins = spins
        self.gamma = gamma
        self.seed = seed
        self.start_temp = start_temp
        self.stop_temp = stop_temp
        self.cooling = cooling
        self.restarts = restarts

    def _detect(self, view):
        return detect_spinglass(view, self.spins, self.gamma, self.seed, self.start_temp,
                                self.stop_temp, self.cooling, self.restarts, per_component=True)


class PageRank(TransformerMixin, BaseEstimator):
    """PageRank as a transformer: ``transform`` returns the score column."""

    def __init__(self, damping=0.85, tolerance=1e-12, max_iterations=200, dangling_policy="uniform"):
        self.damping = damping
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.dangling_policy = dangling_policy

    def fit(self, X, y=None):
        graph = check_graph(X)
        self.result_ = pagerank(graph, self.damping, self.tolerance, self.max_iterations,
                                self.dangling_policy)
        self.scores_ = self.result_.as_array(graph.vertices)
        self.n_iter_ = self.result_.iterations_used
        return self

    def transform(self, X=None):
        check_is_fitted(self, "scores_")
        return self.scores_[:, None]


class PowerLawFitter(BaseEstimator):
    def __init__(self, x_min=1, method="mle"):
        self.x_min = x_min
        self.method = method

    def fit(self, X, y=None):
        self.fit_ = fit_power_law(np.asarray(X).ravel(), self.x_min, self.method)
        self.alpha_ = self.fit_.alpha
        return self


class FruchtermanReingold(TransformerMixin, BaseEstimator):
    """Layout embedding; ``embedding_`` holds one ``(x, y)`` row per vertex."""

    def __init__(self, iterations=500, seed=7, initial_temperature=0.1):
        self.iterations = iterations
        self.seed = seed
        self.initial_temperature = initial_temperature

    def fit(self, X, y=None):
        view = check_view(X)
        self.layout_ = layout_fruchterman_reingold(view, self.iterations, self.seed,
                                                   self.initial_temperature)
        self.embedding_ = self.layout_.as_array(view.vertices)
        return self

    def transform(self, X=None):
        check_is_fitted(self, "embedding_")
        return self.embedding_
