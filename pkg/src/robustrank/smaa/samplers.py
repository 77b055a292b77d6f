"""
This module defines the weight samplers that implement the IWeightSampler
interface. Every sampler draws from the flat distribution on the weight
simplex, optionally restricted to an ordinal preference between criteria.
"""

from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.core.interfaces import IWeightSampler
from robustrank.core.models import SmaaConfig, WeightVector
from robustrank.exceptions import ConfigurationError, DimensionMismatchError


def _spacings(n: int, rng: np.random.Generator) -> NDArray[np.float64]:
    """Flat simplex draw: gaps between ``n - 1`` sorted uniforms on ``[0, 1]``."""
    cuts = np.sort(rng.random(n - 1))
    return np.diff(np.concatenate(([0.0], cuts, [1.0])))


def _check_order(n: int, order: Sequence[int]) -> tuple[int, ...]:
    order_t = tuple(int(j) for j in order)
    if sorted(order_t) != list(range(n)):
        raise ConfigurationError(
            f"Preference order {order_t} is not a permutation of {n} criteria."
        )
    return order_t


def sample_uniform_simplex(n: int, rng: np.random.Generator) -> WeightVector:
    """
    Draws weights uniformly from the ``(n-1)``-simplex.

    Args:
        n (int): Number of criteria, at least 2.
        rng (np.random.Generator): Random stream to draw from.
    """
    if n < 2:
        raise ConfigurationError(f"Weight sampling needs n >= 2, got {n}.")
    return WeightVector(_spacings(n, rng))


def sample_ordinal(
    n: int, order: Sequence[int], rng: np.random.Generator
) -> WeightVector:
    """
    Draws weights uniformly from the part of the simplex that respects a
    preference order: the draw is sorted descending and its largest component
    goes to ``order[0]``, the next one to ``order[1]`` and so on.

    Args:
        n (int): Number of criteria, at least 2.
        order (Sequence[int]): Zero-based criteria, most important first.
        rng (np.random.Generator): Random stream to draw from.
    """
    if n < 2:
        raise ConfigurationError(f"Weight sampling needs n >= 2, got {n}.")
    order_t = _check_order(n, order)
    ranked = np.sort(_spacings(n, rng))[::-1]
    w = np.empty(n)
    w[list(order_t)] = ranked
    return WeightVector(w)


class UniformWeightSampler(IWeightSampler):
    """Samples from the flat distribution on the simplex."""

    def sample(self, n: int, rng: np.random.Generator) -> NDArray[np.float64]:
        return sample_uniform_simplex(n, rng).w


class OrdinalWeightSampler(IWeightSampler):
    """Samples from the simplex restricted to a total preference order."""

    def __init__(self, order: Sequence[int]):
        self.order = tuple(int(j) for j in order)

    def sample(self, n: int, rng: np.random.Generator) -> NDArray[np.float64]:
        return sample_ordinal(n, self.order, rng).w


class FixedWeightSampler(IWeightSampler):
    """
    Point-mass sampler: every draw returns the same weights and consumes no
    randomness.
    """

    def __init__(self, weights: ArrayLike):
        self.weights = WeightVector(np.asarray(weights, dtype=np.float64))

    def sample(self, n: int, rng: np.random.Generator) -> NDArray[np.float64]:
        if n != self.weights.n:
            raise DimensionMismatchError(
                f"Fixed weights cover {self.weights.n} criteria, asked for {n}."
            )
        return np.array(self.weights.w)


def make_sampler(cfg: SmaaConfig) -> IWeightSampler:
    """Builds the sampler named by a simulation configuration."""
    if cfg.sampler == "uniform":
        return UniformWeightSampler()
    if cfg.sampler == "ordinal":
        assert cfg.preference_order is not None
        return OrdinalWeightSampler(cfg.preference_order)
    assert cfg.fixed_weights is not None
    return FixedWeightSampler(cfg.fixed_weights)
