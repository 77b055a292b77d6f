"""
The social package for robustrank: weight-free rankings from pairwise
winning indices by majority comparison and Schulze resolution of cycles.
"""

from .condorcet import (
    condorcet_ranking,
    condorcet_winner,
    majority_graph,
    schulze_strengths,
)

__all__ = [
    "condorcet_ranking",
    "condorcet_winner",
    "majority_graph",
    "schulze_strengths",
]
