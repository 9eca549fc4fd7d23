"""Shared exception types for the dominator package."""


class DominatorError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(DominatorError):
    """Malformed graph input (edge list or graph6).

    Carries the 1-based line number of the offending input line when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class GenerationError(DominatorError):
    """A graph generator could not produce the requested graph."""


class ParameterError(DominatorError):
    """An operation was called with out-of-range parameters."""


class BudgetExceededError(DominatorError):
    """A search or resampling loop hit its configured budget.

    ``detail`` holds loop-specific diagnostics (e.g. number of still-bad
    vertices for the resampler).
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail
