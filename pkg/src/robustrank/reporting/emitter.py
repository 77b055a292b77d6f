"""
Collecting run outputs under names and writing them to disk.

Every matrix is stored as a labelled table whose rows and columns carry the
decision matrix identifiers; documents (fit reports, tau distributions) are
nested mappings. Numbers are written with 6 significant digits and keys in a
stable order, so the same bundle always produces the same bytes.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from robustrank.core.models import (
    AcceptabilityMatrix,
    CorrelationMatrix,
    DecisionMatrix,
    FitReport,
    PairwiseWinningMatrix,
    Ranking,
    ScoreVector,
    SmaaResult,
)
from robustrank.exceptions import (
    ConfigurationError,
    DimensionMismatchError,
    ReportIOError,
)
from robustrank.learning.fitting import InteractionRow
from robustrank.pipeline.methodologies import TauDistribution, TauTable

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6g"
FORMATS = ("csv", "json")


def _round(value: Any) -> Any:
    """Recursively formats floats to 6 significant digits for JSON output."""
    if isinstance(value, (float, np.floating)):
        return None if np.isnan(value) else float(FLOAT_FORMAT % value)
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, Mapping):
        return {str(k): _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_round(v) for v in value]
    return value


@dataclass
class ReportBundle:
    """
    Named outputs of a run, ready to be emitted.

    Attributes:
        tables (Dict[str, pd.DataFrame]): Labelled matrices and rankings.
        documents (Dict[str, Dict[str, Any]]): Structured reports.
    """

    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    documents: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def names(self) -> List[str]:
        """Returns every entry name in emission order."""
        return sorted(set(self.tables) | set(self.documents))

    def add_table(
        self,
        name: str,
        values: ArrayLike,
        rows: Sequence[str],
        columns: Sequence[str],
        index_label: str = "",
    ) -> pd.DataFrame:
        """Adds a labelled matrix."""
        array = np.asarray(values)
        if array.shape != (len(rows), len(columns)):
            raise DimensionMismatchError(
                f"Table '{name}' of shape {array.shape} with "
                f"{len(rows)}x{len(columns)} labels."
            )
        frame = pd.DataFrame(array, index=list(rows), columns=list(columns))
        frame.index.name = index_label or None
        self.tables[name] = frame
        return frame

    def add_document(self, name: str, document: Mapping[str, Any]) -> None:
        """Adds a structured report."""
        self.documents[name] = dict(document)

    def add_decision_matrix(self, name: str, dm: DecisionMatrix) -> None:
        self.add_table(name, dm.values, dm.alternatives, dm.criteria, "alternative")

    def add_correlation(
        self, name: str, rho: CorrelationMatrix, criteria: Sequence[str]
    ) -> None:
        self.add_table(name, rho.rho, criteria, criteria, "criterion")

    def add_scores(
        self, name: str, scores: ScoreVector, alternatives: Sequence[str]
    ) -> None:
        self.add_table(name, scores.s[:, None], alternatives, ["score"], "alternative")

    def add_ranking(
        self,
        name: str,
        ranking: Ranking,
        alternatives: Sequence[str],
        scores: Optional[ScoreVector] = None,
    ) -> None:
        """Adds a ranking as rows ``position, alternative[, score]``, best first."""
        frame = pd.DataFrame(
            {
                "position": np.arange(1, ranking.m + 1),
                "alternative": list(ranking.labels(alternatives)),
            }
        )
        if scores is not None:
            frame["score"] = scores.s[list(ranking.order)]
        self.tables[name] = frame.set_index("position")

    def add_acceptability(
        self, name: str, b: AcceptabilityMatrix, alternatives: Sequence[str]
    ) -> None:
        """Adds rank acceptability indices: alternative rows, rank columns."""
        ranks = [f"rank_{s}" for s in range(1, b.b.shape[1] + 1)]
        self.add_table(name, b.b, alternatives, ranks, "alternative")

    def add_pairwise(
        self, name: str, c: PairwiseWinningMatrix, alternatives: Sequence[str]
    ) -> None:
        self.add_table(name, c.c, alternatives, alternatives, "alternative")

    def add_fit(self, name: str, fit: FitReport, criteria: Sequence[str]) -> None:
        """Adds a fitted capacity and its solver diagnostics."""
        self.add_document(
            name,
            {
                "method": fit.method,
                "criteria": list(criteria),
                "shapley": fit.capacity.phi.tolist(),
                "interaction": fit.capacity.interaction.tolist(),
                "ratio_t": fit.ratio_t,
                "objective": fit.objective,
                "active_constraints": [criteria[j] for j in fit.active_constraints],
                "iterations": fit.iterations,
                "kkt_residual": fit.kkt_residual,
            },
        )

    def add_central_weights(
        self,
        name: str,
        smaa: SmaaResult,
        alternatives: Sequence[str],
        criteria: Sequence[str],
    ) -> None:
        """Adds central weights and confidence factors per alternative."""
        report = smaa.central
        rows: List[List[float]] = []
        for w, confidence in zip(report.central_weights, report.confidence):
            weights = [float("nan")] * len(criteria) if w is None else w.w.tolist()
            rows.append(weights + [confidence])
        columns = list(criteria) + ["confidence"]
        self.add_table(name, np.array(rows), alternatives, columns, "alternative")

    def add_tau_table(self, name: str, table: TauTable) -> None:
        self.add_table(name, table.values, table.names, table.names, "ranking")

    def add_tau_distribution(
        self, name: str, distribution: TauDistribution, raw: bool = False
    ) -> None:
        """Adds the five-number summary of a tau distribution, optionally raw."""
        document: Dict[str, Any] = {
            "ranking": distribution.name,
            "family": distribution.family,
            "samples": int(distribution.values.size),
            "summary": distribution.summary,
        }
        if raw:
            document["values"] = distribution.values.tolist()
        self.add_document(name, document)

    def add_interaction_table(
        self, name: str, rows: Sequence[InteractionRow], criteria: Sequence[str]
    ) -> None:
        """Adds one line per criterion pair: correlation and both fits."""
        frame = pd.DataFrame(
            {
                "criterion_a": [criteria[r.pair[0]] for r in rows],
                "criterion_b": [criteria[r.pair[1]] for r in rows],
                "rho": [r.rho for r in rows],
                "interaction_u2": [r.u2 for r in rows],
                "interaction_u1": [r.u1 for r in rows],
                "strong": [r.strong for r in rows],
            }
        )
        frame.index = pd.RangeIndex(1, len(rows) + 1, name="pair")
        self.tables[name] = frame


def _table_document(frame: pd.DataFrame) -> Dict[str, Any]:
    return {
        "index_label": frame.index.name,
        "index": [str(i) for i in frame.index],
        "columns": [str(c) for c in frame.columns],
        "data": frame.to_numpy().tolist(),
    }


def _dump(document: Mapping[str, Any]) -> str:
    return json.dumps(_round(document), indent=2, sort_keys=True) + "\n"


def emit(bundle: ReportBundle, path: Union[str, Path], fmt: str = "csv") -> List[Path]:
    """
    Writes every bundle entry into a directory.

    With ``fmt="csv"`` tables become ``<name>.csv`` and documents
    ``<name>.json``; with ``fmt="json"`` every entry is written as JSON.
    Floats keep 6 significant digits, so a matrix read back from its file
    matches the original only to that precision.

    Args:
        bundle (ReportBundle): Outputs to write.
        path (Union[str, Path]): Target directory, created when missing.
        fmt (str): ``"csv"`` or ``"json"``.

    Returns:
        List[Path]: Written files, in name order.

    Raises:
        ConfigurationError: If the format is unknown.
        ReportIOError: If a file cannot be written.
    """
    if fmt not in FORMATS:
        raise ConfigurationError(f"Unknown report format '{fmt}'; use {FORMATS}.")
    directory = Path(path)
    written: List[Path] = []
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ReportIOError(str(directory), e.strerror or str(e)) from e

    for name in bundle.names():
        if name in bundle.tables and fmt == "csv":
            target = directory / f"{name}.csv"
            content = bundle.tables[name].to_csv(
                float_format=FLOAT_FORMAT, lineterminator="\n"
            )
        elif name in bundle.tables:
            target = directory / f"{name}.json"
            content = _dump(_table_document(bundle.tables[name]))
        else:
            target = directory / f"{name}.json"
            content = _dump(bundle.documents[name])
        try:
            with open(target, "w", encoding="utf-8", newline="") as f:
                f.write(content)
        except OSError as e:
            raise ReportIOError(str(target), e.strerror or str(e)) from e
        written.append(target)

    logger.info(f"Wrote {len(written)} report files to '{directory}'.")
    return written
