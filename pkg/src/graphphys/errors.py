"""Exception types shared across the package.

Everything raised on purpose derives from :class:`GraphPhysError`, so callers
can catch one base class at API boundaries (the command line driver does
exactly that).
"""


class GraphPhysError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeError(GraphPhysError, IndexError):
    """A node or edge index lies outside the valid range."""


class SelfLoopError(GraphPhysError, ValueError):
    """A self-loop was supplied where loops are not allowed."""


class DuplicateEdgeError(GraphPhysError, ValueError):
    """A parallel edge was supplied to a simple graph."""


class DirectedUnsupportedError(GraphPhysError, ValueError):
    """The operation is defined for undirected graphs only."""


class DisconnectedError(GraphPhysError, ValueError):
    """The operation needs a (strongly) connected graph, or two nodes in
    the same component."""


class NotBipartiteError(GraphPhysError, ValueError):
    """The operation needs a bipartite graph."""


class AcyclicError(GraphPhysError, ValueError):
    """A cycle-based quantity was requested for a forest."""


class NotSymmetricError(GraphPhysError, ValueError):
    """A symmetric matrix was expected."""


class SingularResolventError(GraphPhysError, ValueError):
    """The resolvent parameter coincides with an eigenvalue."""


class TooLargeError(GraphPhysError, ValueError):
    """The exact/enumerative routine would exceed its documented size cap."""


class NoSuchEdgeError(GraphPhysError, KeyError):
    """The named edge is not present in the graph."""


class BridgeOrLoopError(GraphPhysError, ValueError):
    """The recurrence step needs an edge that is neither a bridge nor a
    self-loop."""


class NoExternalLegsError(GraphPhysError, ValueError):
    """A momentum-dependent quantity was requested for a diagram without
    external legs."""


class KTooSmallError(GraphPhysError, ValueError):
    """The on-site coupling K does not dominate the adjacency spectrum."""


class EtaTooSmallError(GraphPhysError, ValueError):
    """The attenuation parameter does not exceed the spectral radius."""


class NoConvergenceError(GraphPhysError, RuntimeError):
    """An iterative scheme hit its iteration cap before its tolerance."""


class BadParameterError(GraphPhysError, ValueError):
    """A numeric parameter is outside its admissible range."""


class BadInitialStateError(BadParameterError):
    """An initial condition violates its normalization or bounds."""


class OddNodeCountError(GraphPhysError, ValueError):
    """The half-filled ground state formula needs an even node count."""


class DegenerateFitError(GraphPhysError, ValueError):
    """Too few support points for the requested fit."""


class DegenerateEnsembleError(GraphPhysError, ValueError):
    """The randomized reference ensemble has zero spread."""


class EmptyGraphError(GraphPhysError, ValueError):
    """The operation is undefined for a graph with no edges."""


class ParseError(GraphPhysError, ValueError):
    """An edge-list document failed to parse; carries the line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
