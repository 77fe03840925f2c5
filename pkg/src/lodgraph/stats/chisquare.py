"""Pearson chi-square test of independence on a contingency table."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import DegenerateTable
from .special import chi2_sf

_CHUNK = 1000


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    degrees_of_freedom: int
    p_value: float
    sparse: bool = False
    monte_carlo_p_value: Optional[float] = None
    n_shuffles: int = 0


def _as_counts(table) -> np.ndarray:
    counts = getattr(table, "counts", table)
    a = np.asarray(counts, dtype=float)
    if a.ndim != 2:
        raise DegenerateTable(f"contingency table must be 2-D, got shape {a.shape}")
    if np.any(a < 0):
        raise ValueError("contingency table has negative entries")
    return a


def _trim(a: np.ndarray) -> np.ndarray:
    a = a[a.sum(axis=1) > 0]
    a = a[:, a.sum(axis=0) > 0]
    if a.shape[0] < 2 or a.shape[1] < 2:
        raise DegenerateTable(f"need at least 2 nonzero rows and columns, got {a.shape}")
    return a


def expected_counts(observed: np.ndarray) -> np.ndarray:
    return np.outer(observed.sum(axis=1), observed.sum(axis=0)) / observed.sum()


def _statistic(observed, expected) -> float:
    return float(((observed - expected) ** 2 / expected).sum())


def _shuffle_chunk(rows, cols, shape, expected, observed_stat, seed, chunk, size):
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk,))))
    nr, nc = shape
    perm = rng.permuted(np.tile(cols, (size, 1)), axis=1)
    codes = rows[None, :] * nc + perm + (np.arange(size) * nr * nc)[:, None]
    tables = np.bincount(codes.ravel(), minlength=size * nr * nc).reshape(size, nr, nc)
    stats = ((tables - expected) ** 2 / expected).sum(axis=(1, 2))
    # tolerance guards against float noise on tables equal to the observed one
    return int(np.count_nonzero(stats >= observed_stat - 1e-9 * max(1.0, observed_stat)))


def monte_carlo_p_value(observed, n_shuffles: int = 100_000, seed: int = 1009, n_jobs: int = 1) -> float:
    """Permutation p-value with both margins fixed.

    Shuffles are generated in fixed-size chunks, each from its own
    counter-based stream keyed on ``(seed, chunk index)``, so the result does
    not depend on ``n_jobs``.
    """
    observed = _trim(_as_counts(observed)).astype(np.int64)
    expected = expected_counts(observed.astype(float))
    observed_stat = _statistic(observed, expected)
    rows, cols = np.nonzero(observed)
    reps = observed[rows, cols]
    rows = np.repeat(rows, reps)
    cols = np.repeat(cols, reps)

    sizes = [min(_CHUNK, n_shuffles - start) for start in range(0, n_shuffles, _CHUNK)]
    args = [(rows, cols, observed.shape, expected, observed_stat, seed, k, s) for k, s in enumerate(sizes)]
    if n_jobs == 1:
        hits = sum(_shuffle_chunk(*a) for a in args)
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            hits = sum(pool.map(lambda a: _shuffle_chunk(*a), args))
    return (hits + 1) / (n_shuffles + 1)


def chi_square_independence(table, monte_carlo: bool = False, n_shuffles: int = 100_000,
                            seed: int = 1009, n_jobs: int = 1) -> ChiSquareResult:
    """Uncorrected Pearson chi-square test.

    All-zero rows and columns are dropped before testing. The result is
    flagged ``sparse`` when more than 20% of expected counts fall below 5;
    the Monte-Carlo p-value is then computed as well (or whenever
    ``monte_carlo`` is set).
    """
    observed = _trim(_as_counts(table))
    expected = expected_counts(observed)
    stat = _statistic(observed, expected)
    df = (observed.shape[0] - 1) * (observed.shape[1] - 1)
    sparse = bool(np.mean(expected < 5) > 0.2)
    mc = None
    if monte_carlo or sparse:
        mc = monte_carlo_p_value(observed, n_shuffles=n_shuffles, seed=seed, n_jobs=n_jobs)
    return ChiSquareResult(stat, df, chi2_sf(stat, df), sparse, mc, n_shuffles if mc is not None else 0)
