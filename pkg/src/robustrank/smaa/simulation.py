"""
Stochastic multicriteria acceptability analysis over the weight space.

Draw ``i`` of a run takes its weights from a random stream derived from the
master seed and ``i`` alone, and draws are processed in chunks of a fixed size.
Counts are integers and the central-weight sums are added chunk by chunk in
index order, so a run is bitwise reproducible for any number of workers.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.aggregation.aggregation_module import AggregationContext
from robustrank.core.interfaces import IWeightSampler
from robustrank.core.models import (
    AcceptabilityMatrix,
    CentralWeightReport,
    DecisionMatrix,
    PairwiseWinningMatrix,
    SmaaConfig,
    SmaaResult,
    WeightVector,
)
from robustrank.core.validation import ranking_from_scores
from robustrank.exceptions import ConfigurationError, DimensionMismatchError
from robustrank.services.sample_executor import SampleExecutor

from .samplers import make_sampler

logger = logging.getLogger(__name__)


@dataclass
class _ChunkTally:
    """Partial counts of one chunk of draws."""

    acceptability: NDArray[np.int64]
    wins: NDArray[np.float64]
    first_counts: NDArray[np.int64]
    first_weight_sums: NDArray[np.float64]
    positions: NDArray[np.int64]
    weights: NDArray[np.float64]
    shrunk: int


def draw_rng(seed: int, index: int) -> np.random.Generator:
    """Returns the random stream owned by draw ``index`` of a run."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.default_rng(sequence)


def positions_from_scores(scores: NDArray[np.float64]) -> NDArray[np.int64]:
    """
    Ranks every column of an ``m x k`` score table.

    Returns:
        NDArray[np.int64]: ``k x m`` one-based positions; equal scores are
        ordered by alternative index.
    """
    m, k = scores.shape
    index = np.broadcast_to(np.arange(m), (k, m))
    order = np.lexsort((index, -scores.T), axis=-1)
    positions = np.empty((k, m), dtype=np.int64)
    ranks = np.broadcast_to(np.arange(1, m + 1), (k, m))
    np.put_along_axis(positions, order, ranks, axis=1)
    return positions


class _ChunkRunner:
    """Evaluates one chunk of draws; shared read-only by all workers."""

    def __init__(
        self,
        values: NDArray[np.float64],
        cfg: SmaaConfig,
        sampler: IWeightSampler,
        context: AggregationContext,
    ):
        self.values = values
        self.cfg = cfg
        self.sampler = sampler
        self.context = context

    def __call__(self, bounds: Tuple[int, int]) -> _ChunkTally:
        start, stop = bounds
        m, n = self.values.shape
        weights = np.vstack(
            [
                self.sampler.sample(n, draw_rng(self.cfg.seed, i))
                for i in range(start, stop)
            ]
        )
        shrink = self.context.shrink_factors(weights)
        scores = self.context.score(self.values, weights)
        positions = positions_from_scores(scores)
        k = positions.shape[0]

        acceptability = np.zeros((m, m), dtype=np.int64)
        np.add.at(acceptability, (np.tile(np.arange(m), k), (positions - 1).ravel()), 1)

        above = (scores[:, None, :] > scores[None, :, :]).sum(axis=2)
        level = (scores[:, None, :] == scores[None, :, :]).sum(axis=2)
        np.fill_diagonal(level, 0)
        wins = above + self.cfg.tie_credit * level

        first = np.argmin(positions, axis=1)
        first_counts = np.bincount(first, minlength=m).astype(np.int64)
        first_weight_sums = np.zeros((m, n))
        np.add.at(first_weight_sums, first, weights)

        logger.debug(f"SMAA draws {start}..{stop - 1} evaluated.")
        return _ChunkTally(
            acceptability=acceptability,
            wins=wins,
            first_counts=first_counts,
            first_weight_sums=first_weight_sums,
            positions=positions,
            weights=weights,
            shrunk=int(np.count_nonzero(shrink < 1.0)),
        )


def _chunks(samples: int, size: int) -> List[Tuple[int, int]]:
    return [(start, min(start + size, samples)) for start in range(0, samples, size)]


def central_weights(
    dm: DecisionMatrix,
    first_counts: NDArray[np.int64],
    first_weight_sums: NDArray[np.float64],
    context: AggregationContext,
) -> CentralWeightReport:
    """
    Derives the central weight vector and confidence factor of every
    alternative.

    The central weight of an alternative is the mean of the draws in which it
    ranks first. With deterministic criterion values its confidence factor is
    1 when it ranks first under its own central weight and 0 otherwise;
    alternatives that never rank first get no central weight and confidence 0.
    """
    central: List[Optional[WeightVector]] = []
    confidence: List[float] = []
    for i in range(dm.m):
        if first_counts[i] == 0:
            central.append(None)
            confidence.append(0.0)
            continue
        w = WeightVector.normalized(first_weight_sums[i] / first_counts[i])
        scores = context.score(dm.values, w.w[None, :])[:, 0]
        central.append(w)
        confidence.append(1.0 if ranking_from_scores(scores).order[0] == i else 0.0)
    return CentralWeightReport(
        tuple(central), tuple(confidence), degenerate_confidence=True
    )


def run_smaa(
    dm: DecisionMatrix,
    cfg: SmaaConfig,
    capacity_interactions: Optional[ArrayLike] = None,
    executor: Optional[SampleExecutor] = None,
) -> SmaaResult:
    """
    Explores the weight space by Monte Carlo simulation.

    Args:
        dm (DecisionMatrix): Alternatives to rank.
        cfg (SmaaConfig): Samples, seed, sampler, aggregator and chunking.
        capacity_interactions (Optional[ArrayLike]): Fixed interaction matrix,
            required by the Choquet aggregator; each draw supplies the Shapley
            values and the matrix is shrunk when a draw cannot carry it.
        executor (Optional[SampleExecutor]): Pool to run chunks on; a pool of
            ``cfg.workers`` threads is created when omitted.

    Returns:
        SmaaResult: Acceptability and pairwise winning indices, central
        weights, and the per-draw positions and weights.

    Raises:
        ConfigurationError: If the Choquet aggregator has no interaction matrix.
        DimensionMismatchError: If configured weights or interactions do not
            match the criteria.
    """
    if cfg.aggregator == "choquet" and capacity_interactions is None:
        raise ConfigurationError("The Choquet aggregator needs an interaction matrix.")
    if cfg.preference_order is not None and len(cfg.preference_order) != dm.n:
        raise DimensionMismatchError(
            f"Preference order covers {len(cfg.preference_order)} criteria, "
            f"matrix has {dm.n}."
        )
    if capacity_interactions is not None:
        shape = np.shape(capacity_interactions)
        if shape != (dm.n, dm.n):
            raise DimensionMismatchError(f"Interaction matrix of shape {shape}.")

    context = AggregationContext(
        capacity_interactions if cfg.aggregator == "choquet" else None
    )
    context.set_strategy(cfg.aggregator)
    runner = _ChunkRunner(dm.values, cfg, make_sampler(cfg), context)

    logger.info(
        f"SMAA run: {cfg.samples} draws, seed {cfg.seed}, sampler '{cfg.sampler}', "
        f"aggregator '{cfg.aggregator}'."
    )
    bounds = _chunks(cfg.samples, cfg.chunk_size)
    if executor is None:
        with SampleExecutor(cfg.workers) as pool:
            tallies = pool.map(runner, bounds)
    else:
        tallies = executor.map(runner, bounds)

    m, n = dm.m, dm.n
    acceptability = np.zeros((m, m), dtype=np.int64)
    wins = np.zeros((m, m))
    first_counts = np.zeros(m, dtype=np.int64)
    first_weight_sums = np.zeros((m, n))
    for tally in tallies:
        acceptability += tally.acceptability
        wins += tally.wins
        first_counts += tally.first_counts
        first_weight_sums += tally.first_weight_sums
    shrunk = sum(tally.shrunk for tally in tallies)

    if shrunk:
        logger.warning(
            f"Interactions were shrunk to stay monotone in {shrunk} of "
            f"{cfg.samples} draws."
        )

    result = SmaaResult(
        acceptability=AcceptabilityMatrix(acceptability / cfg.samples),
        pairwise=PairwiseWinningMatrix(wins / cfg.samples),
        central=central_weights(dm, first_counts, first_weight_sums, context),
        positions=np.vstack([tally.positions for tally in tallies]),
        weights=np.vstack([tally.weights for tally in tallies]),
        shrunk_draws=shrunk,
    )
    logger.info(f"SMAA run finished: {result.samples} draws tallied.")
    return result
