"""
Reading decision matrices and rankings from CSV files.

A decision matrix file has a header row whose first cell is ignored and whose
other cells name the criteria; every following row starts with the
alternative identifier. Files are UTF-8 with a dot decimal separator.
"""

import logging
import re
from pathlib import Path
from typing import List, Union

import pandas as pd

from robustrank.core.models import DecisionMatrix, Ranking
from robustrank.core.validation import validate_matrix
from robustrank.exceptions import DataError, DimensionMismatchError, ParseError
from robustrank.utils.normalization import min_max_normalize

logger = logging.getLogger(__name__)

_LINE_PATTERN = re.compile(r"line (\d+)")


def _read_table(path: Union[str, Path]) -> pd.DataFrame:
    """Reads a headerless CSV as strings, mapping parser failures to ParseError."""
    try:
        return pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            encoding="utf-8",
        )
    except FileNotFoundError as e:
        raise DataError(f"Input file '{path}' does not exist.") from e
    except pd.errors.EmptyDataError as e:
        raise ParseError(1, "The file is empty.") from e
    except pd.errors.ParserError as e:
        match = _LINE_PATTERN.search(str(e))
        raise ParseError(int(match.group(1)) if match else 0, str(e)) from e
    except UnicodeDecodeError as e:
        raise ParseError(0, f"The file is not valid UTF-8: {e.reason}.") from e


def ingest(path: Union[str, Path], normalize: bool = False) -> DecisionMatrix:
    """
    Loads and validates a decision matrix.

    Args:
        path (Union[str, Path]): CSV file to read.
        normalize (bool): Rescale every criterion onto ``[0, 1]`` after
            validation.

    Returns:
        DecisionMatrix: The validated, optionally normalized matrix.

    Raises:
        ParseError: If the file cannot be parsed as CSV.
        TooFewRowsOrColsError: If fewer than 2 alternatives or criteria remain.
        NonFiniteValueError: If a cell is blank, non-numeric or non-finite.
        DuplicateIdentifierError: If identifiers repeat.
    """
    frame = _read_table(path)
    header = [str(cell).strip() for cell in frame.iloc[0].tolist()]
    body = frame.iloc[1:]
    criteria = header[1:]
    alternatives = [str(a).strip() for a in body.iloc[:, 0].tolist()]
    rows = body.iloc[:, 1:].values.tolist()

    dm = validate_matrix(alternatives, criteria, rows)
    logger.info(f"Loaded {dm.m} alternatives x {dm.n} criteria from '{path}'.")
    if normalize:
        dm = min_max_normalize(dm)
        logger.info("Criteria rescaled onto [0, 1].")
    return dm


def read_ranking_labels(path: Union[str, Path]) -> List[str]:
    """
    Reads a ranking file, best first: either one alternative identifier per
    line, or an emitted ranking table with an ``alternative`` column.
    """
    frame = _read_table(path)
    header = [str(cell).strip() for cell in frame.iloc[0].tolist()]
    if "alternative" in header:
        column = frame.iloc[1:, header.index("alternative")]
    else:
        column = frame.iloc[:, 0]
    return [str(label).strip() for label in column.tolist()]


def ranking_from_labels(labels: List[str], alternatives: List[str]) -> Ranking:
    """
    Builds a ranking over ``alternatives`` from identifiers listed best first.

    Raises:
        DimensionMismatchError: If ``labels`` is not a permutation of
            ``alternatives``.
    """
    if sorted(labels) != sorted(alternatives) or len(set(labels)) != len(labels):
        raise DimensionMismatchError(
            "A ranking file must list every alternative exactly once."
        )
    index = {label: i for i, label in enumerate(alternatives)}
    return Ranking.from_order(index[label] for label in labels)
