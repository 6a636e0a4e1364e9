"""Exception hierarchy.

Every error raised on bad input derives from :class:`LatticeCountError`
(itself a :class:`ValueError`), so callers can catch domain errors in one
place. :class:`InternalNonInteger` signals a bug, not bad input.
"""


class LatticeCountError(ValueError):
    """Base class for domain errors."""


class ZeroConstantTerm(LatticeCountError):
    """Series division by a series whose constant term is zero."""


class BadConstantTerm(LatticeCountError):
    """Series square root of a series whose constant term is not 1."""


class OrderExceeded(LatticeCountError):
    """Coefficient requested beyond the truncation order."""


class DomainError(LatticeCountError):
    """Argument outside the domain of a counting function."""


class ParityError(DomainError):
    """Length and height of a +/-1 path have different parity."""


class InvalidEnd(LatticeCountError):
    """A bridge or excursion was asked to end away from height 0."""


class InvalidBounds(LatticeCountError):
    """Strip bounds that do not contain the starting height 0."""


class InvalidJumpSystem(LatticeCountError):
    """Empty jump set, duplicate jumps or a non-positive time length."""


class InternalNonInteger(ArithmeticError):
    """An exact computation that must be integral produced a fraction."""
