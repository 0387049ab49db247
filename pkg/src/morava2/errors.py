"""Exception types shared across the library."""


class Morava2Error(Exception):
    """Base class for all library errors."""


class ContextMismatchError(Morava2Error):
    """Two polynomials from different ring contexts were combined."""


class MissingImageError(Morava2Error):
    """A substitution was asked for a variable with no image."""


class ExponentOverflowError(Morava2Error):
    """A monomial exponent exceeded the hard safety limit."""


class NotDivisibleError(Morava2Error):
    """Exact division failed; ``witness`` holds the offending terms."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class BudgetExceededError(Morava2Error):
    """A configured resource budget (pairs, terms, enumeration steps) ran out."""


class TruncationRequiredError(Morava2Error):
    """The staircase is infinite and no degree bound was supplied."""


class NotInSubringError(Morava2Error):
    """An element could not be rewritten in the subring generators."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class GroupConstructionError(Morava2Error):
    """Closure produced more elements than the expected group order."""
