"""
robustrank command-line entry point.

This module parses the command line, resolves the run settings, sets up
dependency injection using the ServiceProvider and dispatches to one
subcommand. Errors are logged and mapped onto exit codes: 0 on success,
1 for usage and configuration errors, 2 for data errors and 3 for
numerical failures.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, cast

from robustrank import __version__
from robustrank.aggregation.strategies import (
    choquet_2additive_score,
    weighted_sum_score,
)
from robustrank.config import Settings, load_settings
from robustrank.core.models import RunSpec, SmaaConfig
from robustrank.core.validation import ranking_from_scores
from robustrank.exceptions import ConfigurationError, RobustRankError
from robustrank.learning.fitting import strong_correlations
from robustrank.pipeline.methodologies import (
    Methodology2Result,
    Methodology3Result,
    run,
    run_methodology_1,
    run_methodology_2,
    run_methodology_3,
    tau_cross_table,
    weight_perturbation,
)
from robustrank.reporting.bundles import (
    methodology_1_bundle,
    methodology_2_bundle,
    methodology_3_bundle,
    perturbation_bundle,
)
from robustrank.reporting.emitter import FORMATS, ReportBundle, emit
from robustrank.reporting.ingest import ranking_from_labels, read_ranking_labels
from robustrank.services.service_provider import ServiceProvider
from robustrank.utils.stats import pearson_matrix

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
logger = logging.getLogger(__name__)

AGGREGATORS = {"ws": "ws", "ci-u1": "ci_u1", "ci-u2": "ci_u2"}


class _ArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors become ConfigurationError."""

    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data", type=Path, help="Decision matrix CSV file.")
    common.add_argument("--config", type=Path, help="JSON run configuration file.")
    common.add_argument("--seed", type=int, help="Master seed of the simulation.")
    common.add_argument("--samples", type=int, help="Monte Carlo draws.")
    common.add_argument("--workers", type=int, help="Simulation worker threads.")
    common.add_argument("--output", type=Path, help="Directory to write reports to.")
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR.")
    common.add_argument(
        "--normalize",
        action="store_const",
        const=True,
        help="Rescale every criterion onto [0, 1].",
    )
    common.add_argument(
        "--raw-tau",
        action="store_const",
        const=True,
        help="Write every per-draw tau distance.",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Builds the command-line parser with one subparser per command."""
    common = _common_options()
    parser = _ArgumentParser(
        prog="robustrank",
        description="Robustness analysis of composite-indicator rankings.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, summary: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=summary)

    add("ingest-check", "Validate a decision matrix and summarise it.")
    add("correlate", "Pearson correlations and strongly correlated pairs.")

    learn = add("learn", "Learn interaction indices from the correlations.")
    learn.add_argument("--method", choices=("u1", "u2"), default="u2")

    score = add("score", "Score and rank with deterministic weights.")
    score.add_argument("--agg", choices=tuple(AGGREGATORS), default="ws")

    for name, summary in (
        ("smaa", "Rank acceptability and pairwise winning indices."),
        ("condorcet", "Weight-free Condorcet ranking from pairwise winning."),
    ):
        sub = add(name, summary)
        sub.add_argument(
            "--weights", choices=("uniform", "ordinal"), default="uniform"
        )
        sub.add_argument("--agg", choices=tuple(AGGREGATORS), default="ws")

    compare = add("compare", "Kendall tau distances between ranking files.")
    compare.add_argument("rankings", nargs="+", type=Path)

    perturb = add("perturb", "Re-rank with some weights changed.")
    perturb.add_argument(
        "--set",
        dest="changes",
        action="append",
        default=[],
        metavar="CRITERION=WEIGHT",
        help="New weight of a criterion; repeat for several.",
    )

    reproduce = add("reproduce", "Run a methodology end to end.")
    reproduce.add_argument("--methodology", type=int, choices=(1, 2, 3), default=3)
    reproduce.add_argument(
        "--weights", choices=("uniform", "ordinal", "both"), default="both"
    )
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "seed": args.seed,
        "samples": args.samples,
        "workers": args.workers,
        "output_dir": args.output,
        "log_level": args.log_level,
        "normalize": args.normalize,
        "raw_tau": args.raw_tau,
    }


# --- Commands ----------------------------------------------------------------


def _ingest_check(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    dm = services.decision_matrix
    bundle = ReportBundle()
    bundle.add_document(
        "summary",
        {
            "alternatives": dm.m,
            "criteria": list(dm.criteria),
            "normalized": services.settings.normalize,
        },
    )
    return bundle


def _correlate(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    dm = services.decision_matrix
    rho = pearson_matrix(dm)
    bundle = ReportBundle()
    bundle.add_correlation("correlation", rho, dm.criteria)
    bundle.add_document(
        "strong_pairs",
        {
            "pairs": [
                {"a": dm.criteria[j], "b": dm.criteria[k], "rho": rho.rho[j, k]}
                for j, k in strong_correlations(rho)
            ]
        },
    )
    return bundle


def _learn(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    dm = services.decision_matrix
    learned = services.learned
    fit = learned.u1 if args.method == "u1" else learned.u2
    bundle = ReportBundle()
    bundle.add_fit(f"fit_{args.method}", fit, dm.criteria)
    bundle.add_interaction_table("interaction_table", learned.table(), dm.criteria)
    return bundle


def _score(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    dm = services.decision_matrix
    family = AGGREGATORS[args.agg]
    if family == "ws":
        scores = weighted_sum_score(dm, services.weights)
    else:
        fit = services.learned.u1 if family == "ci_u1" else services.learned.u2
        scores = choquet_2additive_score(dm, fit.capacity)
    bundle = ReportBundle()
    bundle.add_ranking(
        f"ranking_{family}", ranking_from_scores(scores), dm.alternatives, scores
    )
    return bundle


def _smaa_config(args: argparse.Namespace, services: ServiceProvider) -> SmaaConfig:
    return services.settings.smaa_config(args.weights)


def _smaa(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    result = run_methodology_2(
        services.decision_matrix,
        _smaa_config(args, services),
        services.weights,
        (AGGREGATORS[args.agg],),
        services.sample_executor,
        learned=services.learned,
    )
    return methodology_2_bundle(services.decision_matrix, result, args.weights)


def _condorcet(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    result = run_methodology_3(
        services.decision_matrix,
        _smaa_config(args, services),
        services.weights,
        (AGGREGATORS[args.agg],),
        services.sample_executor,
        tol=services.settings.u1_tol,
    )
    return methodology_3_bundle(
        services.decision_matrix, result, args.weights, services.settings.raw_tau
    )


def _compare(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    labels = [read_ranking_labels(path) for path in args.rankings]
    names = [path.stem for path in args.rankings]
    if len(set(names)) != len(names):
        raise ConfigurationError("Ranking files must have distinct names.")
    rankings = {
        name: ranking_from_labels(ranked, labels[0])
        for name, ranked in zip(names, labels)
    }
    bundle = ReportBundle()
    bundle.add_tau_table("tau_table", tau_cross_table(rankings))
    return bundle


def _perturb(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    changes: Dict[Any, float] = {}
    for item in args.changes:
        criterion, sep, value = item.partition("=")
        if not sep:
            raise ConfigurationError(f"Expected CRITERION=WEIGHT, got '{item}'.")
        try:
            changes[criterion.strip()] = float(value)
        except ValueError as e:
            raise ConfigurationError(f"Invalid weight in '{item}'.") from e
    dm = services.decision_matrix
    result = weight_perturbation(dm, services.weights, changes)
    return perturbation_bundle(dm, result)


def _reproduce(args: argparse.Namespace, services: ServiceProvider) -> ReportBundle:
    settings = services.settings
    dm = services.decision_matrix
    deterministic = run_methodology_1(
        dm, services.weights, settings.u1_tol, learned=services.learned
    )
    bundle = methodology_1_bundle(dm, deterministic)
    if args.methodology == 1:
        return bundle

    modes = ("uniform", "ordinal") if args.weights == "both" else (args.weights,)
    for mode in modes:
        spec = RunSpec(
            f"M{args.methodology}",
            weight_mode=mode,
            weights=services.weights,
            smaa=settings.smaa_config(mode),
        )
        outcome = run(dm, spec, services.sample_executor, tol=settings.u1_tol)
        if isinstance(outcome, Methodology3Result):
            methodology_3_bundle(dm, outcome, mode, settings.raw_tau, bundle)
        else:
            methodology_2_bundle(dm, cast(Methodology2Result, outcome), mode, bundle)
    return bundle


COMMANDS: Dict[str, Callable[[argparse.Namespace, ServiceProvider], ReportBundle]] = {
    "ingest-check": _ingest_check,
    "correlate": _correlate,
    "learn": _learn,
    "score": _score,
    "smaa": _smaa,
    "condorcet": _condorcet,
    "compare": _compare,
    "perturb": _perturb,
    "reproduce": _reproduce,
}


def _print_bundle(bundle: ReportBundle) -> None:
    for name in bundle.names():
        print(f"# {name}")
        if name in bundle.tables:
            print(bundle.tables[name].to_string(float_format=lambda v: f"{v:.6g}"))
        else:
            print(json.dumps(bundle.documents[name], indent=2, default=str))


def execute(args: argparse.Namespace, settings: Settings) -> List[Path]:
    """
    Runs one parsed command and writes or prints its reports.

    Returns:
        List[Path]: Files written; empty when the reports were printed.
    """
    services = ServiceProvider(settings, data_path=args.data)
    try:
        bundle = COMMANDS[args.command](args, services)
    finally:
        services.stop()
    if args.command == "reproduce" or args.output is not None:
        return emit(bundle, settings.output_dir, args.format)
    _print_bundle(bundle)
    return []


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point for the robustrank command line.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name;
            defaults to ``sys.argv[1:]``.

    Returns:
        int: The process exit code.
    """
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, force=True)
    try:
        args = build_parser().parse_args(argv)
        settings = load_settings(args.config, _overrides(args))
        logging.getLogger().setLevel(settings.log_level)
        logger.info(f"robustrank {__version__}: {args.command}")
        execute(args, settings)
    except RobustRankError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return e.exit_code
    except Exception as e:
        logger.critical(f"Unhandled error: {e}", exc_info=True)
        return 3
    logger.info("robustrank finished.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
