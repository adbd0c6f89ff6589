"""Exception hierarchy shared by all modules."""


class PosetError(Exception):
    pass


class CycleError(PosetError):
    pass


class RedundantEdgeError(PosetError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"cover edge {edge} has an alternate path between its endpoints")


class DuplicateEdgeError(PosetError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"duplicate cover edge {edge}")


class PosetIndexError(PosetError, IndexError):
    pass


class EmptyPosetError(PosetError, ValueError):
    pass


class BudgetExceededError(PosetError):
    pass


class InvalidProfileError(ValueError):
    pass


class SizeError(ValueError):
    pass


class CapBelowLowerBoundError(ValueError):
    pass


class NotMaximumChainError(PosetError, ValueError):
    pass


class ParseError(ValueError):
    """Malformed text input; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)
