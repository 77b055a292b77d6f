"""
Aggregation Context for robustrank.

This module defines the AggregationContext class, which acts as a context for
executing different aggregation strategies over batches of weight vectors.
"""

from typing import Dict, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.core.interfaces import IAggregationStrategy

from .strategies import ChoquetStrategy, WeightedSumStrategy


class AggregationContext:
    """
    A context for scoring alternatives with interchangeable aggregation
    strategies, following the Strategy design pattern.
    """

    def __init__(self, interaction: Optional[ArrayLike] = None, repair: bool = True):
        """
        Initializes the AggregationContext with the available strategies.

        Args:
            interaction (Optional[ArrayLike]): Fixed interaction matrix; when given,
                the ``"choquet"`` strategy becomes available.
            repair (bool): Whether the Choquet strategy shrinks infeasible draws.
        """
        self._strategies: Dict[str, IAggregationStrategy] = {
            "weighted_sum": WeightedSumStrategy(),
        }
        if interaction is not None:
            self._strategies["choquet"] = ChoquetStrategy(interaction, repair=repair)
        self._current_strategy_name: Optional[str] = None

    @property
    def strategy(self) -> Optional[IAggregationStrategy]:
        """Returns the currently active aggregation strategy."""
        if self._current_strategy_name in self._strategies:
            return self._strategies[self._current_strategy_name]
        return None

    @property
    def available(self) -> tuple[str, ...]:
        """Names of the registered strategies."""
        return tuple(self._strategies)

    def set_strategy(self, strategy_name: str) -> None:
        """
        Sets the aggregation strategy to be used.

        Args:
            strategy_name (str): ``"weighted_sum"`` or ``"choquet"``.

        Raises:
            ValueError: If the strategy name is not registered.
        """
        valid_strategies = list(self._strategies.keys())
        if strategy_name not in valid_strategies:
            raise ValueError(
                f"Strategy '{strategy_name}' not found. "
                f"Available strategies: {valid_strategies}"
            )
        self._current_strategy_name = strategy_name

    def score(
        self, values: NDArray[np.float64], weights: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """
        Scores a batch of weight vectors with the current strategy.

        Raises:
            RuntimeError: If no strategy has been set.
        """
        strategy = self.strategy
        if strategy is None:
            raise RuntimeError(
                "No aggregation strategy has been set. Call set_strategy() first."
            )
        return strategy.score_batch(values, weights)

    def shrink_factors(self, weights: NDArray[np.float64]) -> NDArray[np.float64]:
        """Returns the interaction scale factors the current strategy applies."""
        strategy = self.strategy
        if strategy is None:
            raise RuntimeError(
                "No aggregation strategy has been set. Call set_strategy() first."
            )
        return strategy.shrink_factors(weights)
