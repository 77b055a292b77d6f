"""
This module defines the aggregation strategies that implement the
IAggregationStrategy interface, together with the deterministic scoring
functions they are built on: the weighted sum and the 2-additive Choquet
integral expressed through Shapley values and interaction indices.
"""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.core.interfaces import IAggregationStrategy
from robustrank.core.models import (
    Capacity2Additive,
    DecisionMatrix,
    ScoreVector,
    WeightVector,
)
from robustrank.exceptions import (
    DimensionMismatchError,
    InfeasibleCapacityError,
    InvalidCapacityError,
)

logger = logging.getLogger(__name__)


def weighted_sum_score(dm: DecisionMatrix, w: WeightVector) -> ScoreVector:
    """
    Scores every alternative as ``s_i = sum_j w_j * g_j(a_i)``.

    Raises:
        DimensionMismatchError: If the weight count differs from the criteria count.
    """
    if w.n != dm.n:
        raise DimensionMismatchError(f"{w.n} weights for {dm.n} criteria.")
    return ScoreVector(dm.values @ w.w)


def pair_terms(
    values: NDArray[np.float64], interaction: NDArray[np.float64]
) -> NDArray[np.float64]:
    """
    Returns the pairwise part of the 2-additive Choquet integral for every row:
    ``sum_{I>0} min(g_j, g_k) I_jk + sum_{I<0} max(g_j, g_k) |I_jk|``.
    """
    n = values.shape[1]
    rows, cols = np.triu_indices(n, k=1)
    coeff = interaction[rows, cols]
    left, right = values[:, rows], values[:, cols]

    synergy = coeff > 0.0
    redundancy = coeff < 0.0
    result = np.minimum(left, right)[:, synergy] @ coeff[synergy]
    result = result + np.maximum(left, right)[:, redundancy] @ np.abs(coeff[redundancy])
    return np.asarray(result)


def choquet_2additive_score(dm: DecisionMatrix, cap: Capacity2Additive) -> ScoreVector:
    """
    Scores every alternative with the 2-additive Choquet integral.

    The linear part weighs each criterion by ``phi_j - 1/2 sum_k |I_jk|``; the
    pairwise part adds the minimum of synergic pairs and the maximum of
    redundant pairs.

    Raises:
        DimensionMismatchError: If the capacity and the matrix disagree on ``n``.
    """
    if cap.n != dm.n:
        raise DimensionMismatchError(
            f"Capacity over {cap.n} criteria, matrix has {dm.n}."
        )
    linear_weights = cap.phi - 0.5 * np.abs(cap.interaction).sum(axis=1)
    pairs = pair_terms(dm.values, cap.interaction)
    return ScoreVector(pairs + dm.values @ linear_weights)


class WeightedSumStrategy(IAggregationStrategy):
    """
    Aggregates with the weighted sum of criterion values.
    """

    def score_batch(
        self, values: NDArray[np.float64], weights: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Computes ``values @ weights.T``."""
        if weights.shape[1] != values.shape[1]:
            raise DimensionMismatchError("Weight and criteria counts differ.")
        return np.asarray(values @ weights.T)


class ChoquetStrategy(IAggregationStrategy):
    """
    Aggregates with the 2-additive Choquet integral using a fixed interaction
    matrix and the sampled weights as Shapley values.

    A draw whose Shapley values cannot carry the full interaction matrix gets the
    matrix scaled by the largest factor ``beta`` in ``[0, 1]`` that restores
    monotonicity, ``beta = min_j phi_j / (1/2 sum_k |I_jk|)``.
    """

    def __init__(self, interaction: ArrayLike, repair: bool = True):
        """
        Initializes the strategy.

        Args:
            interaction (ArrayLike): Symmetric ``n x n`` interaction indices with a
                zero diagonal.
            repair (bool): Shrink infeasible draws instead of rejecting them.
        """
        matrix = np.array(interaction, dtype=np.float64)
        n = matrix.shape[0]
        if matrix.ndim != 2 or matrix.shape != (n, n):
            raise DimensionMismatchError("The interaction matrix must be square.")
        if not np.array_equal(matrix, matrix.T) or np.any(np.diag(matrix) != 0.0):
            raise InvalidCapacityError(
                "The interaction matrix must be symmetric with a zero diagonal."
            )
        if np.any(np.abs(matrix) > 1.0):
            raise InvalidCapacityError("Interaction indices must lie in [-1, 1].")
        matrix.setflags(write=False)
        self.interaction = matrix
        self.repair = repair
        self._half_row_sums = 0.5 * np.abs(matrix).sum(axis=1)

    def shrink_factors(self, weights: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Returns the interaction scale factor of every weight vector.

        Raises:
            InfeasibleCapacityError: If a draw needs shrinking and repair is off,
                or a weight is negative.
        """
        if np.any(weights < 0.0):
            raise InfeasibleCapacityError("Shapley values must be non-negative.")
        loaded = self._half_row_sums > 0.0
        if not np.any(loaded):
            return np.ones(weights.shape[0])
        ratios = weights[:, loaded] / self._half_row_sums[loaded]
        beta = np.minimum(1.0, ratios.min(axis=1))
        if not self.repair and np.any(beta < 1.0):
            worst = int(np.argmin(beta))
            raise InfeasibleCapacityError(
                f"Draw {worst} violates monotonicity with the fixed interactions "
                f"(largest feasible scale {beta[worst]:.4f})."
            )
        return np.asarray(beta)

    def score_batch(
        self, values: NDArray[np.float64], weights: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Scores every alternative under every weight vector of the batch."""
        if weights.shape[1] != values.shape[1] or values.shape[1] != len(
            self._half_row_sums
        ):
            raise DimensionMismatchError(
                "Weight, criteria and interaction sizes differ."
            )
        beta = self.shrink_factors(weights)
        linear = values @ (weights - beta[:, None] * self._half_row_sums[None, :]).T
        return np.asarray(linear + np.outer(pair_terms(values, self.interaction), beta))
