from .assortativity import EdgeEndpointVectors, assortativity, endpoint_vectors
from .chisquare import ChiSquareResult, chi_square_independence, monte_carlo_p_value
from .correlation import CorrelationResult, correlate, kendall_counts, rankdata
from .powerlaw import (
    DegreeHistogram,
    PowerLawFit,
    degree_histogram,
    discrete_log_likelihood,
    fit_power_law,
    sample_discrete_power_law,
)
from .special import chi2_sf, regularized_beta, regularized_gamma_p, regularized_gamma_q

__all__ = [
    "ChiSquareResult",
    "CorrelationResult",
    "DegreeHistogram",
    "EdgeEndpointVectors",
    "PowerLawFit",
    "assortativity",
    "chi2_sf",
    "chi_square_independence",
    "correlate",
    "degree_histogram",
    "discrete_log_likelihood",
    "endpoint_vectors",
    "fit_power_law",
    "kendall_counts",
    "monte_carlo_p_value",
    "rankdata",
    "regularized_beta",
    "regularized_gamma_p",
    "regularized_gamma_q",
    "sample_discrete_power_law",
]
