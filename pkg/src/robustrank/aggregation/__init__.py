"""
The aggregation package for robustrank.

This package provides the weighted-sum and Choquet-integral scoring methods,
encapsulated within an AggregationContext, and the explicit capacity
transforms used to cross-check them.
"""

from .aggregation_module import AggregationContext
from .capacity import (
    capacity_from_2additive,
    choquet_general_score,
    interaction_from_capacity,
    shapley_from_capacity,
)
from .strategies import (
    ChoquetStrategy,
    WeightedSumStrategy,
    choquet_2additive_score,
    weighted_sum_score,
)

__all__ = [
    "AggregationContext",
    "ChoquetStrategy",
    "WeightedSumStrategy",
    "capacity_from_2additive",
    "choquet_2additive_score",
    "choquet_general_score",
    "interaction_from_capacity",
    "shapley_from_capacity",
    "weighted_sum_score",
]
