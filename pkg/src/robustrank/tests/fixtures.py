"""
Shared test fixtures: the published correlations of the seven index pillars
with the interaction indices learned from them, and access to the optional
country dataset.
"""

import os
import unittest
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple, TypeVar

import numpy as np

from robustrank.config import DATA_DIR_ENV, DATASET_FILE, DEFAULT_WEIGHTS
from robustrank.core.models import CorrelationMatrix, DecisionMatrix, WeightVector
from robustrank.reporting.ingest import ingest

CRITERIA = (
    "Infrastructure",
    "Operating Environment",
    "Talent",
    "Development",
    "Research",
    "Commercial ventures",
    "Government strategy",
)

# Pairs (j, k), zero-based, in lexicographic order.
PAIRS = tuple((j, k) for j in range(7) for k in range(j + 1, 7))

RHO = (
    0.5435, 0.3607, 0.5868, 0.6186, 0.5226, 0.5338,
    0.3503, 0.3320, 0.3332, 0.2464, 0.5136,
    0.6338, 0.7565, 0.6754, 0.3913,
    0.8534, 0.8309, 0.3483,
    0.8558, 0.3815,
    0.2282,
)  # fmt: skip

INTERACTION_U2 = (
    -0.0181, -0.0120, -0.0196, -0.0206, -0.0174, -0.0178,
    -0.0117, -0.0111, -0.0111, -0.0082, -0.0171,
    -0.0212, -0.0253, -0.0225, -0.0131,
    -0.0285, -0.0277, -0.0116,
    -0.0286, -0.0127,
    -0.0076,
)  # fmt: skip

INTERACTION_U1 = (
    -0.1008, 0.0, 0.0, -0.0506, -0.0078, -0.0608,
    0.0, 0.0, 0.0, 0.0, -0.0192,
    -0.0136, -0.1572, -0.1293, 0.0,
    -0.1179, -0.1485, 0.0,
    -0.1943, 0.0,
    0.0,
)  # fmt: skip

RATIO_T = 0.0334


def published_correlation() -> CorrelationMatrix:
    """Returns the pillar correlation matrix."""
    return CorrelationMatrix.from_pairs(7, dict(zip(PAIRS, RHO)))


def published_weights() -> WeightVector:
    return WeightVector(DEFAULT_WEIGHTS)


def as_matrix(pair_values: Tuple[float, ...]) -> np.ndarray:
    """Expands per-pair values into a symmetric matrix with a zero diagonal."""
    matrix = np.zeros((7, 7))
    for (j, k), value in zip(PAIRS, pair_values):
        matrix[j, k] = matrix[k, j] = value
    return matrix


def random_matrix(
    rng: np.random.Generator, m: int, n: int, prefix: str = "A"
) -> DecisionMatrix:
    """Builds a decision matrix of uniform values on ``[0, 1]``."""
    return DecisionMatrix(
        tuple(f"{prefix}{i}" for i in range(m)),
        tuple(f"c{j}" for j in range(n)),
        rng.random((m, n)),
    )


# --- Country dataset ---------------------------------------------------------


def dataset_path() -> Optional[Path]:
    """Location of the country dataset, when it is available."""
    data_dir = os.getenv(DATA_DIR_ENV)
    if not data_dir:
        return None
    path = Path(data_dir) / DATASET_FILE
    return path if path.is_file() else None


_T = TypeVar("_T")

requires_dataset: Callable[[_T], _T] = unittest.skipUnless(
    dataset_path() is not None,
    f"Country dataset not found: set {DATA_DIR_ENV} to a directory holding "
    f"{DATASET_FILE}.",
)

_DATASET_CACHE: Dict[str, DecisionMatrix] = {}


def load_dataset() -> DecisionMatrix:
    """Loads the country dataset once per test session."""
    if "dm" not in _DATASET_CACHE:
        path = dataset_path()
        assert path is not None
        _DATASET_CACHE["dm"] = ingest(path)
    return _DATASET_CACHE["dm"]
