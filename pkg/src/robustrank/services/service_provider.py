"""
This module defines the service provider for robustrank runs, which builds
the shared pieces of a run once and hands them to every command: the
decision matrix, the deterministic weights, the learned interactions and
the worker pool of the simulation.
"""

import logging
from pathlib import Path
from typing import Optional

from robustrank.config import DATA_DIR_ENV, Settings
from robustrank.core.models import DecisionMatrix, WeightVector
from robustrank.exceptions import ConfigurationError, DimensionMismatchError
from robustrank.pipeline.methodologies import LearnedInteractions, learn_interactions
from robustrank.reporting.ingest import ingest
from robustrank.services.sample_executor import SampleExecutor

logger = logging.getLogger(__name__)


class ServiceProvider:
    """
    A lazily populated registry of the components a run needs.
    """

    def __init__(self, settings: Settings, data_path: Optional[Path] = None):
        """
        Initializes the service provider.

        Args:
            settings (Settings): Resolved run settings.
            data_path (Optional[Path]): Decision matrix file. Defaults to the
                dataset fixture under the configured data directory.
        """
        self.settings = settings
        self._data_path = data_path

        # Lazily loaded services
        self._sample_executor: Optional[SampleExecutor] = None
        self._decision_matrix: Optional[DecisionMatrix] = None
        self._learned: Optional[LearnedInteractions] = None

    @property
    def data_path(self) -> Path:
        """The decision matrix file of this run."""
        path = self._data_path or self.settings.dataset_path
        if path is None:
            raise ConfigurationError(
                f"No input data: pass --data or set {DATA_DIR_ENV}."
            )
        if self._data_path is None and not path.is_file():
            logger.warning(f"Dataset fixture '{path}' is missing.")
        return path

    @property
    def decision_matrix(self) -> DecisionMatrix:
        """Provides the ingested, validated decision matrix."""
        if self._decision_matrix is None:
            self._decision_matrix = ingest(
                self.data_path, normalize=self.settings.normalize
            )
        return self._decision_matrix

    @property
    def weights(self) -> WeightVector:
        """Provides the deterministic weights, checked against the criteria."""
        w = self.settings.weight_vector()
        if w.n != self.decision_matrix.n:
            raise DimensionMismatchError(
                f"{w.n} weights configured for {self.decision_matrix.n} criteria."
            )
        return w

    @property
    def learned(self) -> LearnedInteractions:
        """Provides correlations and both interaction fits for the data."""
        if self._learned is None:
            self._learned = learn_interactions(
                self.decision_matrix, self.weights, self.settings.u1_tol
            )
        return self._learned

    @property
    def sample_executor(self) -> SampleExecutor:
        """Provides the worker pool shared by every simulation of the run."""
        if self._sample_executor is None:
            self._sample_executor = SampleExecutor(self.settings.workers)
        return self._sample_executor

    def stop(self) -> None:
        """Releases worker threads, if any were started."""
        if self._sample_executor is not None:
            self._sample_executor.stop()
            self._sample_executor = None
            logger.debug("SampleExecutor stopped.")
