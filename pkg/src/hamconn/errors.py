"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter is outside the range an operation is defined for."""


class CapacityError(ParameterError):
    """An instance is too large for the requested exact computation."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input.

    `offset` is the byte position (within the stripped string) at which
    the problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EnumerationBudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(message)
        self.required = required
        self.budget = budget
