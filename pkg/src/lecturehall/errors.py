"""Exception types shared by the library and the command line."""


class LectureHallError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceeded(LectureHallError):
    """An enumeration would exceed the configured iteration cap."""

    def __init__(self, needed, cap, what="enumeration"):
        self.needed = needed
        self.cap = cap
        self.what = what
        super().__init__(f"{what} needs {needed} iterations, budget is {cap}")


class ConsistencyError(LectureHallError):
    """Two independent computations of the same quantity disagree.

    Each such pair is a proven equivalence, so this always indicates a bug.
    ``state`` carries everything needed to reproduce the disagreement.
    """

    def __init__(self, message, state=None):
        self.state = dict(state or {})
        super().__init__(message)


class SequenceError(LectureHallError, ValueError):
    """Invalid sequence input (non-positive entry, wrong parent, bad syntax)."""
