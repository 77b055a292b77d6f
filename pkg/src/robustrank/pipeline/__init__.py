"""
The pipeline package for robustrank: the three end-to-end methodologies and
the comparisons drawn between their rankings.
"""

from .methodologies import (
    CONDORCET_NAMES,
    RANKING_NAMES,
    LearnedInteractions,
    Methodology1Result,
    Methodology2Result,
    Methodology3Result,
    PerturbationResult,
    TauDistribution,
    TauTable,
    family_of,
    learn_interactions,
    reorder_acceptability,
    run,
    run_methodology_1,
    run_methodology_2,
    run_methodology_3,
    tau_cross_table,
    tau_distributions,
    weight_perturbation,
)

__all__ = [
    "CONDORCET_NAMES",
    "LearnedInteractions",
    "Methodology1Result",
    "Methodology2Result",
    "Methodology3Result",
    "PerturbationResult",
    "RANKING_NAMES",
    "TauDistribution",
    "TauTable",
    "family_of",
    "learn_interactions",
    "reorder_acceptability",
    "run",
    "run_methodology_1",
    "run_methodology_2",
    "run_methodology_3",
    "tau_cross_table",
    "tau_distributions",
    "weight_perturbation",
]
