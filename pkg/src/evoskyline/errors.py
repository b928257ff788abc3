"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for every error this package raises on purpose."""


class OutOfHorizonError(GraphError):
    """A time instant lies outside the graph's horizon."""


class EmptyElementError(GraphError):
    """A temporal element that must be nonempty is empty."""


class WindowError(GraphError):
    """A window is not a contiguous interval ending right before its reference point."""


class SchemaError(GraphError):
    """An aggregation spec does not fit the graph's labels and properties."""


class UniverseMismatchError(GraphError):
    """A value combination or count vector does not belong to the active universe."""


class ParseError(GraphError):
    """A dataset file could not be parsed."""

    def __init__(self, message: str, *, path=None, line: int | None = None):
        prefix = ""
        if path is not None:
            prefix = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(prefix + message)
        self.path = path
        self.line = line


class IntegrityError(GraphError):
    """A loaded dataset violates the graph invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:3])
        more = f" (+{len(self.violations) - 3} more)" if len(self.violations) > 3 else ""
        super().__init__(f"{len(self.violations)} integrity violation(s): {head}{more}")
