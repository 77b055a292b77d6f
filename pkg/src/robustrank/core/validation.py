"""
Validation of raw decision tables and conversion of scores into rankings.
"""

import math
from typing import Any, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from robustrank.exceptions import (
    DimensionMismatchError,
    DuplicateIdentifierError,
    NonFiniteValueError,
    TooFewRowsOrColsError,
)

from .models import DecisionMatrix, Ranking, ScoreVector


def _to_float(cell: Any, row: int, col: int) -> float:
    """Converts one raw cell, rejecting blanks, text and non-finite numbers."""
    if cell is None:
        raise NonFiniteValueError(row, col)
    if isinstance(cell, str):
        cell = cell.strip()
        if not cell:
            raise NonFiniteValueError(row, col)
    try:
        value = float(cell)
    except (TypeError, ValueError) as e:
        raise NonFiniteValueError(
            row, col, f"Value {cell!r} at row {row}, column {col} is not a number."
        ) from e
    if not math.isfinite(value):
        raise NonFiniteValueError(row, col)
    return value


def validate_matrix(
    alternatives: Sequence[str],
    criteria: Sequence[str],
    rows: Sequence[Sequence[Any]],
) -> DecisionMatrix:
    """
    Validates a labelled raw table and returns a decision matrix.

    Args:
        alternatives (Sequence[str]): One identifier per row.
        criteria (Sequence[str]): One identifier per column.
        rows (Sequence[Sequence[Any]]): Raw cells; blanks and ``None`` are missing.

    Returns:
        DecisionMatrix: The validated matrix.

    Raises:
        TooFewRowsOrColsError: Fewer than 2 alternatives or criteria.
        DuplicateIdentifierError: A repeated alternative or criterion identifier.
        NonFiniteValueError: A missing, non-numeric or non-finite cell.
        DimensionMismatchError: Ragged rows or label counts that do not match.
    """
    m, n = len(rows), len(criteria)
    if m < 2 or n < 2:
        raise TooFewRowsOrColsError(m, n)
    if len(alternatives) != m:
        raise DimensionMismatchError(
            f"{len(alternatives)} alternative labels for {m} rows."
        )

    for kind, identifiers in (("alternative", alternatives), ("criterion", criteria)):
        seen = set()
        for identifier in identifiers:
            if identifier in seen:
                raise DuplicateIdentifierError(str(identifier), kind)
            seen.add(identifier)

    values = np.empty((m, n), dtype=np.float64)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatchError(f"Row {i} has {len(row)} cells, expected {n}.")
        for j, cell in enumerate(row):
            values[i, j] = _to_float(cell, i, j)

    return DecisionMatrix(
        tuple(str(a) for a in alternatives), tuple(str(c) for c in criteria), values
    )


def ranking_from_scores(
    scores: ScoreVector | ArrayLike, tie_break: Optional[Sequence[int]] = None
) -> Ranking:
    """
    Sorts alternatives by decreasing score.

    Args:
        scores: A score vector or any array of ``m`` finite scores.
        tie_break (Optional[Sequence[int]]): Priority key per alternative used to
            order equal scores, lowest first. Defaults to the alternative index.

    Returns:
        Ranking: The strict total order, best first.
    """
    if not isinstance(scores, ScoreVector):
        scores = ScoreVector(np.asarray(scores))
    s = scores.s
    keys = np.arange(s.size) if tie_break is None else np.asarray(tie_break)
    if keys.shape != s.shape:
        raise DimensionMismatchError("Tie-break keys must match the score count.")
    # lexsort uses the last key as the primary one.
    order = np.lexsort((keys, -s))
    return Ranking.from_order(order.tolist())
