"""Exception hierarchy shared by all rmramp modules.

DomainError covers violated preconditions (CLI exit code 3), BudgetExceeded
covers aborted exhaustive searches (CLI exit code 4).
"""


class RmrampError(Exception):
    pass


class DomainError(RmrampError):
    """A documented precondition of an operation was violated."""


class BudgetExceeded(RmrampError):
    """An exhaustive search would exceed its configured work budget."""


# field construction / arithmetic

class NonPrimeCharacteristic(DomainError):
    pass


class UnsupportedSize(DomainError):
    pass


class ReduciblePolynomial(DomainError):
    pass


class MixedFields(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


# exponent-vector combinatorics

class MixedShapes(DomainError):
    pass


class InvalidWindow(DomainError):
    pass


class WindowTooLarge(DomainError):
    pass


# weight engine

class PreconditionViolated(DomainError):
    pass


class NotInWindow(DomainError):
    pass


class RankOutOfRange(DomainError):
    pass


class InvalidParameters(DomainError):
    pass


# secret sharing scheme

class LengthMismatch(DomainError):
    pass


class InconsistentShares(DomainError):
    pass


class DecodingFailure(RmrampError):
    """Too many errors on the queried line for the list of correctable patterns."""
