"""Exception types shared across the library."""


class HypertraceError(Exception):
    """Base class for all library errors."""


class BudgetExceededError(HypertraceError):
    """An exact computation would exceed its enumeration budget."""

    def __init__(self, message: str, needed: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class MultiEdgeError(HypertraceError):
    """The requested quantity is undefined on hypergraphs with duplicate edges."""


class NotATreeError(HypertraceError):
    """A tree-only computation was asked for a non-tree graph."""


class FormatError(HypertraceError):
    """Malformed instance file."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
