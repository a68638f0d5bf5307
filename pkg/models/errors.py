class EngineError(Exception):
    """Base class for every failure raised by the enumeration and series engines."""


class SeriesError(EngineError, ArithmeticError):
    pass


class NonProductiveRecursion(EngineError):
    def __init__(self, detail: str = ""):
        message = "non-productive recursion"
        super().__init__(f"{message}: {detail}" if detail else message)


class EmptyClassError(EngineError, ValueError):
    def __init__(self, detail: str = ""):
        message = "class empty at this perimeter"
        super().__init__(f"{message}: {detail}" if detail else message)


class BurnsideIntegrityError(EngineError):
    def __init__(self, detail: str = ""):
        message = "Burnside integrality violated"
        super().__init__(f"{message}: {detail}" if detail else message)


class InvariantViolation(EngineError):
    """A named invariant failed; `invariant` is reported by the CLI."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class UsageError(EngineError, ValueError):
    pass
