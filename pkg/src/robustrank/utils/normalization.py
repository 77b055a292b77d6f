"""
A module for rescaling criterion columns before aggregation.
"""

import numpy as np

from robustrank.core.models import DecisionMatrix
from robustrank.exceptions import ZeroVarianceError


def min_max_normalize(dm: DecisionMatrix) -> DecisionMatrix:
    """
    Rescales every criterion column linearly onto ``[0, 1]``.

    Args:
        dm (DecisionMatrix): The matrix to rescale.

    Returns:
        DecisionMatrix: A matrix with the same labels whose column minimum is 0
        and column maximum is 1.

    Raises:
        ZeroVarianceError: If a column is constant and has no range to map.
    """
    low = dm.values.min(axis=0)
    high = dm.values.max(axis=0)
    span = high - low
    for j, width in enumerate(span):
        if width == 0.0:
            raise ZeroVarianceError(dm.criteria[j])
    return dm.with_values((dm.values - low) / span)
