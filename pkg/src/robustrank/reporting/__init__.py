"""
The reporting package for robustrank: CSV ingestion of decision matrices and
rankings, and deterministic emission of run outputs.
"""

from .emitter import FORMATS, ReportBundle, emit
from .ingest import ingest, ranking_from_labels, read_ranking_labels

__all__ = [
    "FORMATS",
    "ReportBundle",
    "emit",
    "ingest",
    "ranking_from_labels",
    "read_ranking_labels",
]
