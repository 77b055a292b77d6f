"""
This module provides the statistical measures used across robustrank:
Pearson correlation between criteria, Kendall tau distance between rankings
and the five-number summaries reported for distance distributions.
"""

from typing import Dict

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.core.models import CorrelationMatrix, DecisionMatrix, Ranking
from robustrank.exceptions import DimensionMismatchError, ZeroVarianceError

# Rows per block when comparing one ranking against many.
_TAU_BLOCK = 2048


def pearson_matrix(dm: DecisionMatrix) -> CorrelationMatrix:
    """
    Computes the Pearson correlation coefficient of every pair of criteria
    over the alternatives.

    Raises:
        ZeroVarianceError: If a criterion column is constant.
    """
    variances = np.var(dm.values, axis=0)
    for j, variance in enumerate(variances):
        if variance == 0.0:
            raise ZeroVarianceError(dm.criteria[j])

    rho = np.corrcoef(dm.values, rowvar=False)
    rho = np.clip(rho, -1.0, 1.0)
    rho = 0.5 * (rho + rho.T)
    np.fill_diagonal(rho, 1.0)
    return CorrelationMatrix(rho)


def kendall_tau_distance(r1: Ranking, r2: Ranking) -> float:
    """
    Returns the normalized Kendall tau distance between two strict rankings:
    the share of alternative pairs the two rankings order differently.

    Raises:
        DimensionMismatchError: If the rankings cover different numbers of
            alternatives.
    """
    if r1.m != r2.m:
        raise DimensionMismatchError(f"Rankings over {r1.m} and {r2.m} alternatives.")
    m = r1.m
    if m < 2:
        return 0.0
    p1 = np.asarray(r1.position)
    p2 = np.asarray(r2.position)
    rows, cols = np.triu_indices(m, k=1)
    discordant = np.count_nonzero((p1[rows] < p1[cols]) != (p2[rows] < p2[cols]))
    return 2.0 * discordant / (m * (m - 1))


def kendall_tau_to_many(
    reference: Ranking, positions: ArrayLike
) -> NDArray[np.float64]:
    """
    Returns the Kendall tau distance between ``reference`` and each ranking
    given as a row of one-based positions.
    """
    table = np.asarray(positions)
    if table.ndim != 2 or table.shape[1] != reference.m:
        raise DimensionMismatchError(
            f"Positions table of shape {table.shape} for {reference.m} alternatives."
        )
    m = reference.m
    if m < 2:
        return np.zeros(table.shape[0])
    rows, cols = np.triu_indices(m, k=1)
    ref = np.asarray(reference.position)
    ref_less = ref[rows] < ref[cols]

    out = np.empty(table.shape[0])
    for start in range(0, table.shape[0], _TAU_BLOCK):
        block = table[start : start + _TAU_BLOCK]
        discordant = np.count_nonzero(
            (block[:, rows] < block[:, cols]) != ref_less, axis=1
        )
        out[start : start + block.shape[0]] = 2.0 * discordant / (m * (m - 1))
    return out


def five_number_summary(values: ArrayLike) -> Dict[str, float]:
    """Returns the minimum, quartiles, median and maximum of ``values``."""
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        raise DimensionMismatchError("Cannot summarize an empty distribution.")
    q1, median, q3 = np.percentile(data, [25.0, 50.0, 75.0])
    return {
        "min": float(np.min(data)),
        "q1": float(q1),
        "median": float(median),
        "q3": float(q3),
        "max": float(np.max(data)),
    }
