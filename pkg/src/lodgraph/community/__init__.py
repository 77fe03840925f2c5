from .betweenness import detect_girvan_newman, edge_betweenness
from .eigenvector import detect_leading_eigenvector, leading_eigenpair, modularity_matrix
from .partition import Dendrogram, DendrogramStep, Partition, modularity
from .spinglass import detect_spinglass
from .walktrap import detect_walktrap

ALGORITHMS = ("eigen", "walktrap", "betweenness", "spinglass")


def detect(view, algorithm: str = "eigen", walk_length: int = 4, spins: int = 25,
           gamma: float = 1.0, seed: int = 42) -> Partition:
    """Run one of the four detectors by name; disconnected graphs are handled per component."""
    if algorithm == "eigen":
        return detect_leading_eigenvector(view)
    if algorithm == "walktrap":
        return detect_walktrap(view, walk_length)[0]
    if algorithm == "betweenness":
        return detect_girvan_newman(view)[0]
    if algorithm == "spinglass":
        return detect_spinglass(view, spins=spins, gamma=gamma, seed=seed, per_component=True)
    raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")


__all__ = [
    "ALGORITHMS",
    "Dendrogram",
    "DendrogramStep",
    "Partition",
    "detect",
    "detect_girvan_newman",
    "detect_leading_eigenvector",
    "detect_spinglass",
    "detect_walktrap",
    "edge_betweenness",
    "leading_eigenpair",
    "modularity",
    "modularity_matrix",
]
