"""
Run settings for robustrank.

Settings are resolved from four layers, each overriding the previous one:
built-in defaults, environment variables (optionally loaded from a ``.env``
file), a JSON run configuration file and command-line flags.

Environment variables:
    RR_DATA_DIR: Directory holding the dataset fixture ``gaii_2023.csv``.
    RR_LOG_LEVEL: Logging level name used when no flag sets one.
"""

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from dotenv import load_dotenv

# logging.getLevelNamesMapping() is Python 3.11+; it returns a copy of _nameToLevel.
_level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))

from robustrank.core.models import SmaaConfig, WeightVector
from robustrank.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DATA_DIR_ENV = "RR_DATA_DIR"
LOG_LEVEL_ENV = "RR_LOG_LEVEL"
DATASET_FILE = "gaii_2023.csv"

# Published weights of the index: Infrastructure, Operating Environment,
# Talent, Development, Research, Commercial ventures, Government strategy.
DEFAULT_WEIGHTS: Tuple[float, ...] = (0.11, 0.06, 0.15, 0.14, 0.26, 0.24, 0.04)
# Research > Commercial > Talent > Development > Infrastructure >
# Operating Environment > Government strategy, zero-based.
DEFAULT_PREFERENCE_ORDER: Tuple[int, ...] = (4, 5, 2, 3, 0, 1, 6)


@dataclass(frozen=True)
class Settings:
    """
    Resolved run settings.

    Attributes:
        samples (int): Monte Carlo draws per acceptability run.
        seed (int): Master seed of every simulation.
        chunk_size (int): Draws per unit of parallel work.
        workers (int): Worker threads for the simulation.
        tie_credit (float): Credit of a tied pairwise comparison.
        u1_tol (float): KKT tolerance of the least-squares interaction fit.
        data_dir (Optional[Path]): Directory of the dataset fixture.
        normalize (bool): Rescale criteria onto ``[0, 1]`` on ingestion.
        weights (Tuple[float, ...]): Deterministic weights.
        preference_order (Tuple[int, ...]): Zero-based criteria, most
            important first, for ordinal sampling.
        output_dir (Path): Directory reports are written to.
        raw_tau (bool): Also write every per-draw tau distance.
        log_level (str): Logging level name.
    """

    samples: int = 10_000
    seed: int = 20231126
    chunk_size: int = 256
    workers: int = 1
    tie_credit: float = 0.5
    u1_tol: float = 1e-8
    data_dir: Optional[Path] = None
    normalize: bool = False
    weights: Tuple[float, ...] = DEFAULT_WEIGHTS
    preference_order: Tuple[int, ...] = DEFAULT_PREFERENCE_ORDER
    output_dir: Path = Path("reports")
    raw_tau: bool = False
    log_level: str = "INFO"

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ConfigurationError(f"samples must be >= 1, got {self.samples}.")
        if self.chunk_size < 1 or self.workers < 1:
            raise ConfigurationError("chunk_size and workers must be positive.")
        if self.u1_tol <= 0.0:
            raise ConfigurationError("u1_tol must be positive.")
        if self.log_level.upper() not in _level_names():
            raise ConfigurationError(f"Unknown log level '{self.log_level}'.")

    @property
    def dataset_path(self) -> Optional[Path]:
        """Path of the dataset fixture, when a data directory is set."""
        return None if self.data_dir is None else self.data_dir / DATASET_FILE

    def weight_vector(self) -> WeightVector:
        """Returns the deterministic weights as a validated vector."""
        return WeightVector(self.weights)

    def smaa_config(self, sampler: str, aggregator: str = "weighted_sum") -> SmaaConfig:
        """Builds the simulation configuration for a weight mode."""
        return SmaaConfig(
            samples=self.samples,
            seed=self.seed,
            sampler=sampler,
            aggregator=aggregator,
            preference_order=self.preference_order if sampler == "ordinal" else None,
            fixed_weights=self.weights if sampler == "fixed" else None,
            chunk_size=self.chunk_size,
            workers=self.workers,
            tie_credit=self.tie_credit,
        )


def _coerce(name: str, value: Any) -> Any:
    """Converts a raw setting to the type its field expects."""
    try:
        if name in ("samples", "seed", "chunk_size", "workers"):
            if isinstance(value, bool) or int(value) != float(value):
                raise ValueError(value)
            return int(value)
        if name in ("tie_credit", "u1_tol"):
            return float(value)
        if name in ("normalize", "raw_tau"):
            if not isinstance(value, bool):
                raise ValueError(value)
            return value
        if name in ("data_dir", "output_dir"):
            return Path(str(value))
        if name == "weights":
            return tuple(float(v) for v in value)
        if name == "preference_order":
            # One-based in configuration files and on the command line.
            return tuple(int(v) - 1 for v in value)
        if name == "log_level":
            return str(value).upper()
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Invalid value for '{name}': {value!r}.") from e
    raise ConfigurationError(f"Unknown setting '{name}'.")


def _environment() -> Dict[str, Any]:
    load_dotenv()
    layer: Dict[str, Any] = {}
    if os.getenv(DATA_DIR_ENV):
        layer["data_dir"] = os.environ[DATA_DIR_ENV]
    if os.getenv(LOG_LEVEL_ENV):
        layer["log_level"] = os.environ[LOG_LEVEL_ENV]
    return layer


def read_config_file(path: Path) -> Dict[str, Any]:
    """
    Reads a JSON run configuration.

    Raises:
        ConfigurationError: If the file is missing, is not a JSON object or
            names an unknown setting.
    """
    try:
        with open(path, encoding="utf-8") as f:
            document = json.load(f)
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file '{path}': {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Config file '{path}' is not valid JSON: {e}") from e
    if not isinstance(document, dict):
        raise ConfigurationError(f"Config file '{path}' must hold a JSON object.")
    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(document) - known)
    if unknown:
        raise ConfigurationError(f"Unknown settings in '{path}': {unknown}.")
    return document


def load_settings(
    config_path: Optional[Path] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    use_environment: bool = True,
) -> Settings:
    """
    Resolves the settings of a run.

    Args:
        config_path (Optional[Path]): JSON run configuration file.
        overrides (Optional[Mapping[str, Any]]): Values from command-line
            flags; ``None`` entries are ignored.
        use_environment (bool): Read ``RR_DATA_DIR`` and ``RR_LOG_LEVEL``.

    Returns:
        Settings: The merged settings.
    """
    layers = [_environment() if use_environment else {}]
    if config_path is not None:
        layers.append(read_config_file(config_path))
    layers.append({k: v for k, v in (overrides or {}).items() if v is not None})

    merged: Dict[str, Any] = {}
    for layer in layers:
        for name, value in layer.items():
            merged[name] = _coerce(name, value)

    settings = replace(Settings(), **merged)
    logger.debug(f"Resolved settings: {settings}")
    return settings
