"""Exception types shared across the package."""


class RatcatError(Exception):
    """Base class for all domain errors raised by this package."""


class NonCoprimeError(RatcatError):
    """An operation that needs gcd(m, n) = 1 was given a non-coprime pair."""


class NotDyckError(RatcatError):
    """A Dyck-path-only operation was given a path that dips below the diagonal."""


class InvalidRankSetError(RatcatError):
    """A rank set does not encode any Dyck path for the given rectangle."""


class NotSelfComplementError(RatcatError):
    """The half-step folding map is only defined on self-rank-complement paths."""


class CellOutOfShapeError(RatcatError):
    """A cell coordinate lies outside the Ferrers diagram."""


class NotCoreError(RatcatError):
    """A partition has a hook length ruled out by the requested core condition."""


class NotFlushError(RatcatError):
    """A hook set is not flush for the requested modulus."""


class InexactDivisionError(RatcatError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class LimitExceededError(RatcatError):
    """An enumeration would exceed the configured object cap."""


class CountMismatchError(RatcatError):
    """An enumerated count disagrees with its closed-form value."""
