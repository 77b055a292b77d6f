"""
robustrank - Robustness analysis of composite-indicator rankings

This package ranks alternatives described by a decision matrix with weighted
sums and 2-additive Choquet integrals, measures how those rankings react to
uncertain weights through stochastic acceptability analysis, and derives
weight-free Condorcet rankings from the simulated pairwise preferences.
"""

__version__ = "0.1.0"
