"""Exception hierarchy.

Errors are split by who is at fault: bad data (GraphInputError), bad call
parameters (ParameterError), an operation applied outside its stated domain
(PreconditionError), an embedding/face structure that is not a quadrangulation
(EmbeddingError and subclasses), a construction whose hypotheses fail midway
(ConstructionError), an internal consistency guarantee that broke
(ContractViolationError), and a graph that defeats the classification decision
tree (ClassificationError).  The last two are loud by design: they indicate a
bug, never a routine condition.
"""


class EtquadError(Exception):
    """Base class for all library errors."""


class GraphInputError(EtquadError):
    """Malformed graph data: loops, bad ids, unparseable edge-list files."""


class ParameterError(EtquadError, ValueError):
    """A constructor or operation was called with invalid parameters."""


class PreconditionError(EtquadError):
    """An operation's stated precondition does not hold for the input."""


class EmbeddingError(EtquadError):
    """A face list or rotation system is not a valid embedding."""


class NotQuadrangulationError(EmbeddingError):
    """The angle structure at some vertex does not chain into a single cycle."""


class NonOrientableError(EmbeddingError):
    """Coordinate development met an orientation reversal."""


class ConstructionError(EtquadError):
    """A generic construction's hypotheses failed during the build."""


class ContractViolationError(EtquadError):
    """An internal invariant that should be unreachable was violated."""


class ClassificationError(EtquadError):
    """A branch of the classification decision tree failed verification."""


class NotAMemberError(EtquadError):
    """The input graph is not a connected edge-transitive 4-regular girth-4 graph."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
