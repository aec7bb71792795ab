"""Exception types shared across the package."""


class RingIsoError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RingIsoError):
    """A value violates a structural invariant (bad complex, ideal, map, ...)."""


class MismatchError(RingIsoError):
    """Arity, dimension, field, or variable-count mismatch between operands."""


class GuardError(RingIsoError):
    """An input exceeds a hard size guard of an exponential-cost operation."""


class ParseError(RingIsoError):
    """Syntax or lookup error while parsing a polynomial expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InternalContradictionError(RingIsoError):
    """The input contradicts a property every valid isomorphism pair has."""


class ExtractionFailure(RingIsoError):
    """A stage of the extraction pipeline rejected the input pair."""

    def __init__(self, stage: str, message: str, report=None):
        super().__init__(f"stage '{stage}': {message}")
        self.stage = stage
        self.report = report
