"""
Turning methodology results into report bundles.

Entry names are lower-case so they double as file names, e.g.
``ranking_ci_u2`` or ``uniform_acceptability_ws``.
"""

from typing import Optional

from robustrank.core.models import DecisionMatrix
from robustrank.pipeline.methodologies import (
    CONDORCET_NAMES,
    RANKING_NAMES,
    LearnedInteractions,
    Methodology1Result,
    Methodology2Result,
    Methodology3Result,
    PerturbationResult,
    reorder_acceptability,
)

from .emitter import ReportBundle


def entry_name(ranking_name: str) -> str:
    """Maps a display name such as ``CI_u2-Cond`` to ``ci_u2_cond``."""
    return ranking_name.lower().replace("-", "_")


def learned_bundle(
    dm: DecisionMatrix,
    learned: LearnedInteractions,
    bundle: Optional[ReportBundle] = None,
) -> ReportBundle:
    """Adds the correlations, both fits and the per-pair interaction table."""
    bundle = bundle if bundle is not None else ReportBundle()
    bundle.add_correlation("correlation", learned.correlation, dm.criteria)
    bundle.add_fit("fit_u1", learned.u1, dm.criteria)
    bundle.add_fit("fit_u2", learned.u2, dm.criteria)
    bundle.add_interaction_table("interaction_table", learned.table(), dm.criteria)
    return bundle


def methodology_1_bundle(
    dm: DecisionMatrix,
    result: Methodology1Result,
    bundle: Optional[ReportBundle] = None,
) -> ReportBundle:
    """Adds the deterministic scores, rankings and their tau distances."""
    bundle = learned_bundle(dm, result.learned, bundle)
    for name, ranking in result.rankings.items():
        bundle.add_ranking(
            f"ranking_{entry_name(name)}",
            ranking,
            dm.alternatives,
            result.scores[name],
        )
    bundle.add_document(
        "tau_deterministic",
        {f"{a}|{b}": value for (a, b), value in result.tau.items()},
    )
    return bundle


def methodology_2_bundle(
    dm: DecisionMatrix,
    result: Methodology2Result,
    mode: str,
    bundle: Optional[ReportBundle] = None,
) -> ReportBundle:
    """Adds acceptability, pairwise winning and central weights per family."""
    bundle = bundle if bundle is not None else ReportBundle()
    for family, smaa in result.smaa.items():
        prefix = f"{mode}_{{}}_{family}"
        bundle.add_acceptability(
            prefix.format("acceptability"), smaa.acceptability, dm.alternatives
        )
        bundle.add_pairwise(prefix.format("pairwise"), smaa.pairwise, dm.alternatives)
        bundle.add_central_weights(
            prefix.format("central_weights"), smaa, dm.alternatives, dm.criteria
        )
        bundle.add_document(
            prefix.format("run"),
            {
                "family": family,
                "sampler": result.config.sampler,
                "samples": smaa.samples,
                "seed": result.config.seed,
                "shrunk_draws": smaa.shrunk_draws,
                "degenerate_confidence": smaa.central.degenerate_confidence,
            },
        )
    return bundle


def methodology_3_bundle(
    dm: DecisionMatrix,
    result: Methodology3Result,
    mode: str,
    raw_tau: bool = False,
    bundle: Optional[ReportBundle] = None,
) -> ReportBundle:
    """
    Adds the Condorcet rankings, the tau cross-table, the tau distributions
    and the acceptability matrices reordered by the deterministic and the
    Condorcet ranking of each family.
    """
    bundle = methodology_2_bundle(dm, result.simulation, mode, bundle)
    for family, condorcet in result.condorcet.items():
        name = entry_name(CONDORCET_NAMES[family])
        bundle.add_ranking(f"{mode}_ranking_{name}", condorcet.ranking, dm.alternatives)
        bundle.add_document(
            f"{mode}_condorcet_{family}",
            {
                "has_cycle": condorcet.has_cycle,
                "condorcet_winner": (
                    None
                    if condorcet.condorcet_winner is None
                    else dm.alternatives[condorcet.condorcet_winner]
                ),
                "copeland": dict(zip(dm.alternatives, condorcet.copeland.tolist())),
            },
        )
        acceptability = result.simulation.smaa[family].acceptability
        for label, ranking in (
            ("deterministic", result.rankings[RANKING_NAMES[family]]),
            ("condorcet", condorcet.ranking),
        ):
            bundle.add_acceptability(
                f"{mode}_acceptability_{family}_by_{label}",
                reorder_acceptability(acceptability, ranking),
                ranking.labels(dm.alternatives),
            )
    bundle.add_tau_table(f"{mode}_tau_table", result.tau_table)
    for name, distribution in result.tau_distributions.items():
        bundle.add_tau_distribution(
            f"{mode}_tau_{entry_name(name)}", distribution, raw=raw_tau
        )
    return bundle


def perturbation_bundle(
    dm: DecisionMatrix,
    result: PerturbationResult,
    bundle: Optional[ReportBundle] = None,
) -> ReportBundle:
    """Adds a perturbed ranking and the alternatives that changed place."""
    bundle = bundle if bundle is not None else ReportBundle()
    bundle.add_ranking("ranking_perturbed", result.ranking, dm.alternatives)
    bundle.add_document(
        "perturbation",
        {
            "weights": dict(zip(dm.criteria, result.weights.w.tolist())),
            "tau": result.tau,
            "moved": [
                {"alternative": dm.alternatives[i], "from": old, "to": new}
                for i, old, new in result.moved
            ],
        },
    )
    return bundle
