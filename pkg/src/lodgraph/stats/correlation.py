"""Pearson, Spearman and Kendall tau-b correlation with two-sided p-values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..exceptions import TooFewSamples, ZeroVariance
from ..validation import check_paired
from .special import normal_two_sided_p, t_two_sided_p

METHODS = ("pearson", "spearman", "kendall")


@dataclass(frozen=True)
class CorrelationResult:
    coefficient: float
    p_value: float
    method: str
    n: int


class KendallCounts(NamedTuple):
    concordant: int
    discordant: int
    tied_x: int  # pairs tied on x (including those tied on both)
    tied_y: int
    tied_both: int


def rankdata(a) -> np.ndarray:
    """Ranks starting at 1; tied values share their average (mid) rank."""
    a = np.asarray(a, dtype=float)
    order = np.argsort(a, kind="mergesort")
    sorted_a = a[order]
    ranks = np.empty(a.size, dtype=float)
    # boundaries of runs of equal values
    starts = np.flatnonzero(np.r_[True, sorted_a[1:] != sorted_a[:-1]])
    ends = np.r_[starts[1:], a.size]
    for s, e in zip(starts, ends):
        ranks[order[s:e]] = (s + e + 1) / 2.0
    return ranks


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise ZeroVariance("correlation undefined: an input has zero variance")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def _t_pvalue(r: float, n: int) -> float:
    if abs(r) >= 1.0:
        return 0.0
    df = n - 2
    t = r * math.sqrt(df / (1.0 - r * r))
    return t_two_sided_p(t, df)


def kendall_counts(x, y) -> KendallCounts:
    """Pair classification over all ``n(n-1)/2`` pairs."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    conc = disc = tx = ty = txy = 0
    for i in range(x.size - 1):
        sx = np.sign(x[i + 1:] - x[i])
        sy = np.sign(y[i + 1:] - y[i])
        prod = sx * sy
        conc += int(np.count_nonzero(prod > 0))
        disc += int(np.count_nonzero(prod < 0))
        zx = sx == 0
        zy = sy == 0
        tx += int(np.count_nonzero(zx))
        ty += int(np.count_nonzero(zy))
        txy += int(np.count_nonzero(zx & zy))
    return KendallCounts(conc, disc, tx, ty, txy)


def _tie_groups(a: np.ndarray) -> np.ndarray:
    _, counts = np.unique(a, return_counts=True)
    return counts[counts > 1].astype(float)


def _kendall(x: np.ndarray, y: np.ndarray):
    n = x.size
    counts = kendall_counts(x, y)
    n0 = n * (n - 1) // 2
    denom_x = n0 - counts.tied_x
    denom_y = n0 - counts.tied_y
    if denom_x == 0 or denom_y == 0:
        raise ZeroVariance("kendall tau undefined: an input is constant")
    s = counts.concordant - counts.discordant
    tau = s / math.sqrt(denom_x * denom_y)
    tau = min(1.0, max(-1.0, tau))

    # variance of S under independence, adjusted for ties in both inputs
    t = _tie_groups(x)
    u = _tie_groups(y)
    v0 = n * (n - 1) * (2 * n + 5)
    vt = float(np.sum(t * (t - 1) * (2 * t + 5)))
    vu = float(np.sum(u * (u - 1) * (2 * u + 5)))
    v1 = float(np.sum(t * (t - 1))) * float(np.sum(u * (u - 1))) / (2.0 * n * (n - 1))
    v2 = (
        float(np.sum(t * (t - 1) * (t - 2)))
        * float(np.sum(u * (u - 1) * (u - 2)))
        / (9.0 * n * (n - 1) * (n - 2))
    )
    var_s = (v0 - vt - vu) / 18.0 + v1 + v2
    if var_s <= 0:
        return tau, 1.0
    # continuity correction shrinks |S| by one toward zero
    z = max(abs(s) - 1, 0) / math.sqrt(var_s)
    return tau, normal_two_sided_p(z)


def correlate(x, y, method: str = "pearson") -> CorrelationResult:
    """Correlation coefficient and two-sided p-value.

    Parameters
    ----------
    x, y : array-like of float
        Paired samples, at least 3 of them.
    method : {"pearson", "spearman", "kendall"}
        Spearman is Pearson over mid-ranks; Kendall is tau-b with a
        tie-adjusted normal approximation (continuity corrected).
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    x, y = check_paired(x, y)
    n = x.size
    if n < 3:
        raise TooFewSamples(f"need at least 3 paired samples, got {n}")
    if method == "pearson":
        r = _pearson(x, y)
        return CorrelationResult(r, _t_pvalue(r, n), method, n)
    if method == "spearman":
        r = _pearson(rankdata(x), rankdata(y))
        return CorrelationResult(r, _t_pvalue(r, n), method, n)
    tau, p = _kendall(x, y)
    return CorrelationResult(tau, p, method, n)
