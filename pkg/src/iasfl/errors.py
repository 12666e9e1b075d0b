"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed input: bad set literal, graph file, labeling file or argument.

    ``source`` and ``line`` locate the problem when it came from a file.
    """

    def __init__(self, message: str, source: str | None = None, line: int | None = None):
        self.message = message
        self.source = source
        self.line = line
        super().__init__(str(self))

    def __str__(self) -> str:
        where = ""
        if self.source is not None and self.line is not None:
            where = f"{self.source}:{self.line}: "
        elif self.source is not None:
            where = f"{self.source}: "
        elif self.line is not None:
            where = f"line {self.line}: "
        return where + self.message


class EmptyLabelError(ValueError):
    """An empty set was used where a set-label is required."""

    def __init__(self, message: str = "empty set-label"):
        super().__init__(message)


class GroundViolation(ValueError):
    """An induced edge label escapes the declared ground set."""

    def __init__(self, edge: tuple[str, str], label, ground):
        self.edge = edge
        self.label = label
        self.ground = ground
        super().__init__(f"ground-violation: edge {edge[0]}-{edge[1]} label {label} not a subset of {ground}")


class NotAnIASL(ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not an IASL: {reason}")


class NotAnIASFL(ValueError):
    pass


class ScaleGuardError(ValueError):
    """The brute-force oracle refused an instance above its size guard."""
