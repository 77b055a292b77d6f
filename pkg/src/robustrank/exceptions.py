"""
Custom exceptions used across the robustrank engine.

Errors fall into three families that the command-line front end maps onto
exit codes: configuration problems (1), data problems (2) and numerical
failures (3).
"""

from typing import Optional


class RobustRankError(Exception):
    """Base class for all custom exceptions in robustrank."""

    exit_code: int = 1

    def __init__(self, message: str = "A robustrank error occurred."):
        self.message = message
        super().__init__(self.message)


class ConfigurationError(RobustRankError):
    """Exception raised for invalid or missing configuration settings."""

    exit_code = 1

    def __init__(self, message: str = "A run configuration error occurred."):
        super().__init__(message)


# --- Data errors -------------------------------------------------------------


class DataError(RobustRankError):
    """Base class for errors caused by the input data."""

    exit_code = 2

    def __init__(self, message: str = "Invalid input data."):
        super().__init__(message)


class NonFiniteValueError(DataError):
    """Raised when a decision matrix cell is missing, NaN or infinite."""

    def __init__(self, row: int, col: int, message: Optional[str] = None):
        self.row = row
        self.col = col
        super().__init__(
            message or f"Non-finite value at row {row}, column {col}."
        )


class DuplicateIdentifierError(DataError):
    """Raised when alternative or criterion identifiers repeat."""

    def __init__(self, identifier: str, kind: str = "identifier"):
        self.identifier = identifier
        super().__init__(f"Duplicate {kind}: '{identifier}'.")


class TooFewRowsOrColsError(DataError):
    """Raised when a decision matrix has fewer than 2 alternatives or criteria."""

    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols
        super().__init__(
            f"A decision matrix needs at least 2 alternatives and 2 criteria, "
            f"got {rows}x{cols}."
        )


class ParseError(DataError):
    """Raised when an input file cannot be parsed."""

    def __init__(self, line: int, message: str = "Could not parse input."):
        self.line = line
        super().__init__(f"Line {line}: {message}")


class DimensionMismatchError(DataError):
    """Raised when two inputs disagree on their dimensions."""

    def __init__(self, message: str = "Input dimensions do not agree."):
        super().__init__(message)


class ZeroVarianceError(DataError):
    """Raised when a criterion column is constant and has no correlation."""

    def __init__(self, criterion: str):
        self.criterion = criterion
        super().__init__(f"Criterion '{criterion}' has zero variance.")


class InvalidMatrixError(DataError):
    """Raised when a pairwise winning matrix violates its invariants."""

    def __init__(self, message: str = "Invalid pairwise winning matrix."):
        super().__init__(message)


class ReportIOError(DataError):
    """Raised when a report cannot be written to disk."""

    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"Could not write '{path}': {reason}")


# --- Numerical errors --------------------------------------------------------


class NumericalError(RobustRankError):
    """Base class for numerical failures."""

    exit_code = 3

    def __init__(self, message: str = "A numerical failure occurred."):
        super().__init__(message)


class InvalidCapacityError(NumericalError):
    """Raised when a capacity violates normalization or monotonicity."""

    def __init__(self, message: str = "The capacity violates its axioms."):
        super().__init__(message)


class InfeasibleCapacityError(NumericalError):
    """Raised when sampled Shapley values cannot carry the fixed interactions."""

    def __init__(self, message: str = "Sampled weights yield an infeasible capacity."):
        super().__init__(message)


class NonConvergenceError(NumericalError):
    """Raised when an iterative solver stops before certifying optimality."""

    def __init__(self, iterations: int, message: Optional[str] = None):
        self.iterations = iterations
        super().__init__(
            message or f"Solver did not converge after {iterations} iterations."
        )


class DegenerateInputError(NumericalError):
    """Raised when an optimization problem is degenerate for the given input."""

    def __init__(self, message: str = "Degenerate optimization input."):
        super().__init__(message)
