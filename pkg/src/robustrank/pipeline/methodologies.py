"""
End-to-end robust-ranking runs.

Three methodologies are offered, each building on the previous one:

1. Deterministic weights: the criteria correlations are turned into
   interaction indices (``u1`` and ``u2`` fits, with the weights as Shapley
   values) and the Choquet rankings are compared with the weighted sum.
2. Sampled weights: a Monte Carlo acceptability analysis per aggregator
   family, with the fitted interaction matrices held fixed.
3. Weight-free rankings: the pairwise winning indices of every family go
   through a Condorcet/Schulze ranking, compared against each other and
   against every simulated ranking.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from robustrank.aggregation.strategies import (
    choquet_2additive_score,
    weighted_sum_score,
)
from robustrank.core.models import (
    AGGREGATOR_FAMILIES,
    AcceptabilityMatrix,
    CondorcetResult,
    CorrelationMatrix,
    DecisionMatrix,
    FitReport,
    Ranking,
    RunSpec,
    ScoreVector,
    SmaaConfig,
    SmaaResult,
    WeightVector,
)
from robustrank.core.validation import ranking_from_scores
from robustrank.exceptions import ConfigurationError, DimensionMismatchError
from robustrank.learning.fitting import (
    InteractionRow,
    fit_u1,
    fit_u2,
    interaction_table,
)
from robustrank.services.sample_executor import SampleExecutor
from robustrank.smaa.simulation import run_smaa
from robustrank.social.condorcet import condorcet_ranking
from robustrank.utils.stats import (
    five_number_summary,
    kendall_tau_distance,
    kendall_tau_to_many,
    pearson_matrix,
)

logger = logging.getLogger(__name__)

# Display names of the deterministic and Condorcet ranking of each family.
RANKING_NAMES = {"ws": "WS", "ci_u2": "CI_u2", "ci_u1": "CI_u1"}
CONDORCET_NAMES = {"ws": "WS-Cond", "ci_u2": "CI_u2-Cond", "ci_u1": "CI_u1-Cond"}


def family_of(name: str) -> str:
    """Returns the aggregator family a ranking name belongs to."""
    for table in (RANKING_NAMES, CONDORCET_NAMES):
        for family, label in table.items():
            if label == name:
                return family
    raise ConfigurationError(f"Unknown ranking name '{name}'.")


@dataclass(frozen=True)
class LearnedInteractions:
    """Correlations of a decision matrix and both fits learned from them."""

    correlation: CorrelationMatrix
    u1: FitReport
    u2: FitReport

    def interactions(self, family: str) -> Optional[NDArray[np.float64]]:
        """Returns the interaction matrix a family aggregates with, if any."""
        if family == "ci_u1":
            return self.u1.capacity.interaction
        if family == "ci_u2":
            return self.u2.capacity.interaction
        return None

    def table(self) -> List[InteractionRow]:
        """Lists every criterion pair with its correlation and learned indices."""
        return interaction_table(self.correlation, self.u2, self.u1)


@dataclass(frozen=True, eq=False)
class TauTable:
    """
    Kendall tau distances between named rankings.

    Attributes:
        names (Tuple[str, ...]): Ranking names, in row and column order.
        values (NDArray[np.float64]): Symmetric matrix with a zero diagonal.
    """

    names: Tuple[str, ...]
    values: NDArray[np.float64]

    def distance(self, a: str, b: str) -> float:
        """Returns the distance between two named rankings."""
        return float(self.values[self.names.index(a), self.names.index(b)])


@dataclass(frozen=True, eq=False)
class TauDistribution:
    """
    Kendall tau distances between one ranking and every simulated ranking.

    Attributes:
        name (str): The ranking compared.
        family (str): Aggregator family of the simulation compared against.
        values (NDArray[np.float64]): One distance per draw.
        summary (Dict[str, float]): Minimum, quartiles, median and maximum.
    """

    name: str
    family: str
    values: NDArray[np.float64]
    summary: Dict[str, float]


@dataclass(frozen=True)
class Methodology1Result:
    """Deterministic-weight rankings and their distances to the weighted sum."""

    weights: WeightVector
    learned: LearnedInteractions
    scores: Dict[str, ScoreVector]
    rankings: Dict[str, Ranking]
    tau: Dict[Tuple[str, str], float]


@dataclass(frozen=True)
class Methodology2Result:
    """Acceptability analysis of every aggregator family."""

    config: SmaaConfig
    learned: LearnedInteractions
    smaa: Dict[str, SmaaResult]

    def acceptability(self, family: str) -> AcceptabilityMatrix:
        """Returns the rank acceptability indices of a family."""
        return self.smaa[family].acceptability


@dataclass(frozen=True)
class Methodology3Result:
    """Condorcet rankings with their comparisons to all other rankings."""

    simulation: Methodology2Result
    condorcet: Dict[str, CondorcetResult]
    rankings: Dict[str, Ranking]
    tau_table: TauTable
    tau_distributions: Dict[str, TauDistribution] = field(default_factory=dict)


@dataclass(frozen=True)
class PerturbationResult:
    """
    The effect of changing some weights on a weighted-sum ranking.

    Attributes:
        weights (WeightVector): The perturbed weights.
        base (Ranking): Ranking under the original weights.
        ranking (Ranking): Ranking under the perturbed weights.
        tau (float): Kendall tau distance between the two.
        moved (Tuple[Tuple[int, int, int], ...]): ``(alternative, old, new)``
            positions of every alternative that changed place.
    """

    weights: WeightVector
    base: Ranking
    ranking: Ranking
    tau: float
    moved: Tuple[Tuple[int, int, int], ...]


def learn_interactions(
    dm: DecisionMatrix, phi: WeightVector, tol: float = 1e-8
) -> LearnedInteractions:
    """Correlates the criteria and fits both interaction models."""
    logger.info(f"Correlating {dm.n} criteria over {dm.m} alternatives.")
    rho = pearson_matrix(dm)
    return LearnedInteractions(rho, fit_u1(rho, phi, tol), fit_u2(rho, phi))


def _check_families(families: Sequence[str]) -> Tuple[str, ...]:
    unknown = [f for f in families if f not in AGGREGATOR_FAMILIES]
    if unknown or not families:
        raise ConfigurationError(f"Unknown aggregator families: {unknown}.")
    return tuple(families)


def run_methodology_1(
    dm: DecisionMatrix,
    w: WeightVector,
    tol: float = 1e-8,
    learned: Optional[LearnedInteractions] = None,
) -> Methodology1Result:
    """
    Ranks with the weighted sum and with both Choquet fits under fixed weights.

    Args:
        dm (DecisionMatrix): Alternatives to rank.
        w (WeightVector): Weights, also used as Shapley values of the fits.
        tol (float): KKT tolerance of the ``u1`` fit.
        learned (Optional[LearnedInteractions]): Previously learned fits.

    Returns:
        Methodology1Result: Scores and rankings per family and the Kendall tau
        distance of each Choquet ranking to the weighted-sum one.
    """
    if w.n != dm.n:
        raise DimensionMismatchError(f"{w.n} weights for {dm.n} criteria.")
    learned = learned or learn_interactions(dm, w, tol)
    scores = {
        "ws": weighted_sum_score(dm, w),
        "ci_u2": choquet_2additive_score(dm, learned.u2.capacity),
        "ci_u1": choquet_2additive_score(dm, learned.u1.capacity),
    }
    rankings = {
        RANKING_NAMES[family]: ranking_from_scores(s) for family, s in scores.items()
    }
    base = rankings["WS"]
    tau = {
        ("WS", name): kendall_tau_distance(base, rankings[name])
        for name in ("CI_u2", "CI_u1")
    }
    for (a, b), value in tau.items():
        logger.info(f"Kendall tau({a}, {b}) = {value:.4f}")
    return Methodology1Result(
        weights=w,
        learned=learned,
        scores={RANKING_NAMES[f]: s for f, s in scores.items()},
        rankings=rankings,
        tau=tau,
    )


def run_methodology_2(
    dm: DecisionMatrix,
    cfg: SmaaConfig,
    phi: WeightVector,
    families: Sequence[str] = AGGREGATOR_FAMILIES,
    executor: Optional[SampleExecutor] = None,
    learned: Optional[LearnedInteractions] = None,
    tol: float = 1e-8,
) -> Methodology2Result:
    """
    Runs the acceptability analysis once per aggregator family.

    The interaction matrices are learned once, with ``phi`` as Shapley
    values, and then held fixed while each draw supplies new weights.

    Args:
        dm (DecisionMatrix): Alternatives to rank.
        cfg (SmaaConfig): Simulation settings; the aggregator is set per family.
        phi (WeightVector): Shapley values used to learn the interactions.
        families (Sequence[str]): Families among ``ws``, ``ci_u1`` and ``ci_u2``.
        executor (Optional[SampleExecutor]): Shared worker pool.
        learned (Optional[LearnedInteractions]): Previously learned fits.
        tol (float): KKT tolerance of the ``u1`` fit.
    """
    families_t = _check_families(families)
    learned = learned or learn_interactions(dm, phi, tol)
    results: Dict[str, SmaaResult] = {}
    for family in families_t:
        aggregator = "weighted_sum" if family == "ws" else "choquet"
        logger.info(f"Acceptability analysis for family '{family}'.")
        results[family] = run_smaa(
            dm,
            replace(cfg, aggregator=aggregator),
            capacity_interactions=learned.interactions(family),
            executor=executor,
        )
    return Methodology2Result(config=cfg, learned=learned, smaa=results)


def tau_cross_table(rankings: Mapping[str, Ranking]) -> TauTable:
    """Computes the Kendall tau distance between every pair of named rankings."""
    names = tuple(rankings)
    values = np.zeros((len(names), len(names)))
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            d = kendall_tau_distance(rankings[names[a]], rankings[names[b]])
            values[a, b] = values[b, a] = d
    return TauTable(names, values)


def tau_distributions(
    rankings: Mapping[str, Ranking], smaa: Mapping[str, SmaaResult]
) -> Dict[str, TauDistribution]:
    """
    Compares every named ranking with each simulated ranking of its own
    family, e.g. ``WS`` and ``WS-Cond`` against the weighted-sum draws.
    Rankings whose family was not simulated are skipped.
    """
    distributions: Dict[str, TauDistribution] = {}
    for name, ranking in rankings.items():
        family = family_of(name)
        if family not in smaa:
            continue
        values = kendall_tau_to_many(ranking, smaa[family].positions)
        distributions[name] = TauDistribution(
            name=name, family=family, values=values, summary=five_number_summary(values)
        )
        logger.info(
            f"Tau of {name} against {values.size} '{family}' draws: "
            f"median {distributions[name].summary['median']:.4f}"
        )
    return distributions


def run_methodology_3(
    dm: DecisionMatrix,
    cfg: SmaaConfig,
    phi: WeightVector,
    families: Sequence[str] = AGGREGATOR_FAMILIES,
    executor: Optional[SampleExecutor] = None,
    simulation: Optional[Methodology2Result] = None,
    tol: float = 1e-8,
) -> Methodology3Result:
    """
    Builds a weight-free Condorcet ranking for every aggregator family and
    compares it with the deterministic rankings and the simulated ones.

    Args:
        dm (DecisionMatrix): Alternatives to rank.
        cfg (SmaaConfig): Simulation settings.
        phi (WeightVector): Deterministic weights; they serve as Shapley
            values of the fits and give the reference rankings.
        families (Sequence[str]): Families to evaluate.
        executor (Optional[SampleExecutor]): Shared worker pool.
        simulation (Optional[Methodology2Result]): A finished simulation to reuse.
        tol (float): KKT tolerance of the ``u1`` fit.
    """
    families_t = _check_families(families)
    if simulation is None:
        simulation = run_methodology_2(dm, cfg, phi, families_t, executor, tol=tol)
    deterministic = run_methodology_1(dm, phi, tol, learned=simulation.learned)

    condorcet: Dict[str, CondorcetResult] = {}
    rankings: Dict[str, Ranking] = {}
    for family in families_t:
        rankings[RANKING_NAMES[family]] = deterministic.rankings[RANKING_NAMES[family]]
    for family in families_t:
        result = condorcet_ranking(simulation.smaa[family].pairwise)
        condorcet[family] = result
        rankings[CONDORCET_NAMES[family]] = result.ranking

    return Methodology3Result(
        simulation=simulation,
        condorcet=condorcet,
        rankings=rankings,
        tau_table=tau_cross_table(rankings),
        tau_distributions=tau_distributions(rankings, simulation.smaa),
    )


def run(
    dm: DecisionMatrix,
    spec: RunSpec,
    executor: Optional[SampleExecutor] = None,
    tol: float = 1e-8,
) -> Union[Methodology1Result, Methodology2Result, Methodology3Result]:
    """
    Executes a run specification.

    Methodologies 2 and 3 sample weights as named by ``spec.weight_mode``
    and need ``spec.weights`` to learn the interactions. The named pairs in
    ``spec.comparisons`` are looked up in the tau cross-table of
    Methodology 3 and logged.
    """
    if spec.weights is None:
        raise ConfigurationError("A run needs reference weights.")
    if spec.methodology == "M1":
        return run_methodology_1(dm, spec.weights, tol)
    cfg = replace(spec.smaa, sampler=spec.weight_mode)
    if spec.methodology == "M2":
        return run_methodology_2(
            dm, cfg, spec.weights, spec.families, executor, tol=tol
        )
    result = run_methodology_3(dm, cfg, spec.weights, spec.families, executor, tol=tol)
    for a, b in spec.comparisons:
        if a not in result.tau_table.names or b not in result.tau_table.names:
            raise ConfigurationError(f"Cannot compare '{a}' with '{b}'.")
        logger.info(f"Kendall tau({a}, {b}) = {result.tau_table.distance(a, b):.4f}")
    return result


def reorder_acceptability(
    b: AcceptabilityMatrix, ranking: Ranking
) -> AcceptabilityMatrix:
    """Returns the acceptability rows in the order of ``ranking``, best first."""
    if ranking.m != b.b.shape[0]:
        raise DimensionMismatchError("Ranking and acceptability sizes differ.")
    return AcceptabilityMatrix(b.b[list(ranking.order)])


def weight_perturbation(
    dm: DecisionMatrix, w: WeightVector, changes: Mapping[Union[int, str], float]
) -> PerturbationResult:
    """
    Re-ranks with some weights replaced and reports what moved.

    Args:
        dm (DecisionMatrix): Alternatives to rank.
        w (WeightVector): Original weights.
        changes (Mapping[Union[int, str], float]): New weight per criterion,
            keyed by zero-based index or identifier.

    Raises:
        ConfigurationError: If the changed weights leave the simplex.
    """
    new = np.array(w.w)
    for key, value in changes.items():
        j = dm.criterion_index(key) if isinstance(key, str) else int(key)
        if not 0 <= j < dm.n:
            raise ConfigurationError(f"No criterion at index {j}.")
        new[j] = value
    perturbed = WeightVector(new)

    base = ranking_from_scores(weighted_sum_score(dm, w))
    ranking = ranking_from_scores(weighted_sum_score(dm, perturbed))
    moved = tuple(
        (i, base.position[i], ranking.position[i])
        for i in range(dm.m)
        if base.position[i] != ranking.position[i]
    )
    return PerturbationResult(
        weights=perturbed,
        base=base,
        ranking=ranking,
        tau=kendall_tau_distance(base, ranking),
        moved=moved,
    )
