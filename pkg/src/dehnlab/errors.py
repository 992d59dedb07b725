"""Exception types shared across the package."""


class DehnlabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DehnlabError):
    """Malformed word or presentation text.

    Carries optional ``line`` and ``col`` (1-based) locating the problem.
    """

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)


class UniverseMismatchError(DehnlabError):
    """Operands belong to different generator universes."""


class BudgetExceededError(DehnlabError):
    """A bounded computation (coset enumeration, area search) ran out of budget
    before reaching a definite answer."""


class NotNullHomotopicError(DehnlabError):
    """A word asserted to be null-homotopic admits no filling within the
    configured bounds; either the assertion is wrong or max_area is too small."""


class InsufficientDataError(DehnlabError):
    """Too few data points to attempt a growth classification."""


class FinitenessNotEstablishedError(DehnlabError):
    """A family-level average was requested for a family without a proven
    finite truncation of its nonzero contributions."""


class ValidationError(DehnlabError):
    """A named precondition of a family builder or validator failed."""
