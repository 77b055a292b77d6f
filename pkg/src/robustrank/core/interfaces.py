"""
Core interfaces for robustrank.

This module defines the abstract base classes that form the contracts between
the simulation loop and the pieces it plugs together: the aggregation strategy
that turns weight draws into scores, and the sampler that produces the draws.
"""

from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray


class IAggregationStrategy(ABC):
    """Abstract interface for an aggregation method (weighted sum, Choquet)."""

    @abstractmethod
    def score_batch(
        self, values: NDArray[np.float64], weights: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """
        Scores every alternative under a batch of weight vectors.

        Args:
            values (NDArray[np.float64]): ``m x n`` decision matrix values.
            weights (NDArray[np.float64]): ``k x n`` weight vectors, one per row.

        Returns:
            NDArray[np.float64]: ``m x k`` scores, column ``t`` scored with row
            ``t`` of ``weights``.
        """
        raise NotImplementedError

    def shrink_factors(self, weights: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Returns, per weight vector, the factor applied to any fixed interaction
        structure to keep the aggregation a valid capacity. Additive strategies
        never shrink.
        """
        return np.ones(weights.shape[0])


class IWeightSampler(ABC):
    """Abstract interface for a weight-space sampler."""

    @abstractmethod
    def sample(self, n: int, rng: np.random.Generator) -> NDArray[np.float64]:
        """
        Draws one weight vector on the ``(n-1)``-simplex.

        Args:
            n (int): Number of criteria.
            rng (np.random.Generator): Random stream owned by the current draw.

        Returns:
            NDArray[np.float64]: Non-negative weights summing to one.
        """
        raise NotImplementedError
