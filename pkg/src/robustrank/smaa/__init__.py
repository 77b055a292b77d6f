"""
The smaa package for robustrank: weight-space samplers and the Monte Carlo
acceptability analysis built on them.
"""

from .samplers import (
    FixedWeightSampler,
    OrdinalWeightSampler,
    UniformWeightSampler,
    make_sampler,
    sample_ordinal,
    sample_uniform_simplex,
)
from .simulation import central_weights, draw_rng, positions_from_scores, run_smaa

__all__ = [
    "FixedWeightSampler",
    "OrdinalWeightSampler",
    "UniformWeightSampler",
    "central_weights",
    "draw_rng",
    "make_sampler",
    "positions_from_scores",
    "run_smaa",
    "sample_ordinal",
    "sample_uniform_simplex",
]
