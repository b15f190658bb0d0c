"""Exception hierarchy.

Precondition violations and enumeration overflows are kept apart because
the CLI maps them to distinct exit codes (2 and 3 respectively).
"""

from __future__ import annotations


class RankguardError(Exception):
    """Base class for all library errors."""


class PreconditionError(RankguardError):
    """An operation was called with arguments violating its contract."""


class EnumerationTooLarge(RankguardError):
    """An exhaustive enumeration would exceed the configured cap."""


class BudgetExceeded(RankguardError):
    """A sampled run hit its trial budget; carries the partial report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotIrreducible(PreconditionError):
    """The supplied modulus polynomial factors over the base field."""


class UnsupportedSize(PreconditionError):
    """q^m exceeds the cap that keeps element enumeration feasible."""


class DivisionByZero(PreconditionError, ZeroDivisionError):
    """Multiplicative inverse of the zero element was requested."""


class AmbientMismatch(PreconditionError):
    """Subspace operands live in different ambient spaces."""


class LengthMismatch(PreconditionError):
    """Vector operands have different lengths."""


class DimensionMismatch(PreconditionError):
    """Matrix/vector dimensions are incompatible."""


class DependentPoints(PreconditionError):
    """Evaluation points are linearly dependent over the base field."""


class DegreeTooSmall(PreconditionError):
    """The extension degree is too small for the requested code length."""


class NotSystematizable(PreconditionError):
    """The leading columns of the generator are singular; caller must permute."""


class EmptyIndexSet(PreconditionError):
    """A puncturing index set must be nonempty."""


class NotASubcode(PreconditionError):
    """The second code is not a proper subcode of the first."""


class PacketTooShort(PreconditionError):
    """Packet length m is below the l+n floor of the explicit construction."""


class BadDimensions(PreconditionError):
    """Scheme dimensions violate 1 <= l <= k <= n."""


class DegreeMismatch(PreconditionError):
    """Lifting requires the outer degree to equal inner degree plus n."""


class InfeasibleRank(PreconditionError):
    """No N x n matrix can satisfy the requested rank constraint."""


class SuiteUnknown(PreconditionError):
    """Unknown acceptance suite name."""
