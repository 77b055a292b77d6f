"""
The learning package for robustrank: unsupervised fitting of interaction
indices from criterion correlations, and the small QP solver behind it.
"""

from .fitting import (
    InteractionRow,
    fit_u1,
    fit_u2,
    interaction_table,
    pair_labels,
    strong_correlations,
)
from .qp import ActiveSetQPSolver, QPResult, kkt_residual

__all__ = [
    "ActiveSetQPSolver",
    "InteractionRow",
    "QPResult",
    "fit_u1",
    "fit_u2",
    "interaction_table",
    "kkt_residual",
    "pair_labels",
    "strong_correlations",
]
