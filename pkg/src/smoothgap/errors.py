"""Exception types shared across the package."""


class CapacityError(Exception):
    """An allocation or scan bound exceeds the configured budget."""


class FactorBudgetError(Exception):
    """Trial division exhausted its budget with a composite residual left over."""

    def __init__(self, n: int, residual: int, limit: int):
        self.n = n
        self.residual = residual
        self.limit = limit
        super().__init__(
            f"cannot factor {n}: residual {residual} has no prime factor <= {limit}"
        )


class TupleParseError(Exception):
    """A tuple text file failed to parse."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
