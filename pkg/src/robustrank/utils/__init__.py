"""
The `utils` package provides numerical helpers that are used across robustrank
but belong to no single stage of the engine.

Modules:
- `stats`: Pearson correlation of criteria, Kendall tau distance between
           rankings and five-number summaries.
- `normalization`: Min-max rescaling of decision matrix columns.
"""

from . import normalization, stats

__all__ = ["normalization", "stats"]
