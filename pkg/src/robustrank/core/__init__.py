"""
The core package for robustrank: domain models, interfaces and validation.
"""

from .models import (
    AcceptabilityMatrix,
    Capacity2Additive,
    CapacitySetFunction,
    CentralWeightReport,
    CondorcetResult,
    CorrelationMatrix,
    DecisionMatrix,
    FitReport,
    MajorityGraph,
    PairwiseWinningMatrix,
    Ranking,
    RunSpec,
    ScoreVector,
    SmaaConfig,
    SmaaResult,
    WeightVector,
)
from .validation import ranking_from_scores, validate_matrix

__all__ = [
    "AcceptabilityMatrix",
    "Capacity2Additive",
    "CapacitySetFunction",
    "CentralWeightReport",
    "CondorcetResult",
    "CorrelationMatrix",
    "DecisionMatrix",
    "FitReport",
    "MajorityGraph",
    "PairwiseWinningMatrix",
    "Ranking",
    "RunSpec",
    "ScoreVector",
    "SmaaConfig",
    "SmaaResult",
    "WeightVector",
    "ranking_from_scores",
    "validate_matrix",
]
