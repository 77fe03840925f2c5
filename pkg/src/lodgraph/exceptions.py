"""Exception hierarchy.

Every error raised by the library derives from :class:`LodGraphError`, so
callers (and the CLI) can catch analysis failures with a single clause.
Input-shaped errors also derive from :class:`ValueError`.
"""


class LodGraphError(Exception):
    """Base class for all library errors."""


class IngestError(LodGraphError, ValueError):
    """Problem reading an input file. Carries optional line context."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLine(IngestError):
    pass


class MalformedRow(IngestError):
    pass


class SelfLoop(IngestError):
    pass


class DuplicateEdge(IngestError):
    pass


class EmptyInput(IngestError):
    pass


class NegativeTripleCount(IngestError):
    pass


class UnknownVertex(LodGraphError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown vertex"


class EmptyGraph(LodGraphError, ValueError):
    pass


class EmptyEdgeSet(LodGraphError, ValueError):
    pass


class DisconnectedGraph(LodGraphError, ValueError):
    pass


# spinglass is specified in terms of a "Disconnected" error
Disconnected = DisconnectedGraph


class LengthMismatch(LodGraphError, ValueError):
    pass


class ZeroVariance(LodGraphError, ValueError):
    pass


class TooFewSamples(LodGraphError, ValueError):
    pass


class TooFewEdges(LodGraphError, ValueError):
    pass


class DegenerateDistribution(LodGraphError, ValueError):
    pass


class DegenerateTable(LodGraphError, ValueError):
    pass


class DomainError(LodGraphError, ValueError):
    pass


class NoConvergence(LodGraphError, RuntimeError):
    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class NoLabeledVertices(LodGraphError, ValueError):
    pass


class OutOfRange(LodGraphError, ValueError):
    pass


class InconsistentCoverage(LodGraphError, ValueError):
    pass
