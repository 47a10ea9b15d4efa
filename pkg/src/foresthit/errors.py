"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the front end never has
to enumerate exception types.
"""


class ForestHitError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class RationalParseError(ForestHitError, ValueError):
    """Malformed rational literal, zero denominator, or inexact input."""


class DimensionError(ForestHitError, ValueError):
    """Incompatible matrix shapes."""


class SingularMatrixError(ForestHitError, ArithmeticError):
    """No nonzero pivot was left in some elimination column."""

    exit_code = 2


class ChainValidationError(ForestHitError, ValueError):
    """Input does not describe a valid chain or graph."""


class PreconditionError(ForestHitError, ValueError):
    """A parameter is outside its admissible range."""


class SizeGuardError(ForestHitError, ValueError):
    """Brute-force enumeration refused because n exceeds the guard."""


class MathematicalPreconditionError(ForestHitError):
    """The input is well formed but the mathematics is undefined for it."""

    exit_code = 2


class NotErgodicError(MathematicalPreconditionError):
    """Chain is reducible: some vertex is the root of no spanning tree."""


class DisconnectedGraphError(MathematicalPreconditionError):
    """Undirected graph is disconnected (or has an isolated vertex)."""


class DegenerateSizeError(MathematicalPreconditionError):
    """Quantity is undefined for a one-state chain."""


class NotWeightableError(ForestHitError):
    """Cyclic tour property fails; ``witness`` is the offending 1-based triple."""

    exit_code = 2

    def __init__(self, witness, lhs, rhs):
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"not weightable: cyclic tour fails at {witness} ({lhs} != {rhs})"
        )


class InvariantError(ForestHitError, AssertionError):
    """An internal identity that must hold exactly did not."""

    exit_code = 3
