"""
Unsupervised learning of 2-additive interaction indices from the correlation
between criteria.

The Shapley values are fixed to the given weights and never optimized. Two
fits are offered:

- ``u1`` brings every interaction index as close as possible to ``-rho`` in
  least squares, subject to the monotonicity of the capacity.
- ``u2`` scales the whole correlation matrix by a single ratio ``t`` and takes
  the largest ``t`` in ``[0, 1]`` that keeps the capacity monotone.

Both treat correlations below ``ZERO_CORRELATION`` in magnitude as zero.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from robustrank.core.models import (
    Capacity2Additive,
    CorrelationMatrix,
    FitReport,
    WeightVector,
)
from robustrank.exceptions import DimensionMismatchError

from .qp import ActiveSetQPSolver

logger = logging.getLogger(__name__)

ZERO_CORRELATION = 1e-12
ACTIVE_TOL = 1e-7
STRONG_CORRELATION = 0.70


def _check_inputs(rho: CorrelationMatrix, phi: WeightVector) -> None:
    if rho.n != phi.n:
        raise DimensionMismatchError(
            f"Correlation matrix over {rho.n} criteria, weights over {phi.n}."
        )


def _significant(rho: CorrelationMatrix) -> NDArray[np.float64]:
    """Returns ``rho`` with the diagonal and negligible entries set to zero."""
    off = np.array(rho.rho, dtype=np.float64)
    np.fill_diagonal(off, 0.0)
    off[np.abs(off) < ZERO_CORRELATION] = 0.0
    return off


def _active(cap: Capacity2Additive) -> Tuple[int, ...]:
    slack = cap.monotonicity_slack()
    return tuple(int(j) for j in np.flatnonzero(slack <= ACTIVE_TOL))


def _objective(interaction: NDArray[np.float64], rho: CorrelationMatrix) -> float:
    rows, cols = np.triu_indices(rho.n, k=1)
    return float(np.sum((interaction[rows, cols] + rho.rho[rows, cols]) ** 2))


def fit_u2(rho: CorrelationMatrix, phi: WeightVector) -> FitReport:
    """
    Learns interaction indices proportional to the correlations,
    ``I = -t * rho``, with the largest consistent ratio ``t`` in ``[0, 1]``.

    The monotonicity constraint of criterion ``j`` bounds the ratio by
    ``2 phi_j / sum_k |rho_jk|``; criteria with no significant correlation do
    not bound it, and when none does ``t = 1``.

    Args:
        rho (CorrelationMatrix): Correlations between criteria.
        phi (WeightVector): Weights used as Shapley values.

    Returns:
        FitReport: The capacity, the ratio ``t`` and the tight constraints.
    """
    _check_inputs(rho, phi)
    off = _significant(rho)
    loads = np.abs(off).sum(axis=1)
    bounded = loads > 0.0

    ratio = 1.0
    if np.any(bounded):
        ratio = min(1.0, float(np.min(2.0 * phi.w[bounded] / loads[bounded])))

    interaction = -ratio * off
    interaction[interaction == 0.0] = 0.0
    cap = Capacity2Additive(phi.w, interaction)
    report = FitReport(
        method="u2",
        capacity=cap,
        ratio_t=ratio,
        active_constraints=_active(cap),
    )
    logger.info(
        f"u2 fit: ratio t={ratio:.6f}, "
        f"tight criteria {list(report.active_constraints)}."
    )
    return report


def fit_u1(rho: CorrelationMatrix, phi: WeightVector, tol: float = 1e-8) -> FitReport:
    """
    Learns the interaction indices closest to ``-rho`` in least squares under
    the monotonicity constraints of the capacity.

    Each index keeps the sign of ``-rho``, so the problem is solved over the
    magnitudes ``y = |I|``:

        minimize    sum (y_jk - |rho_jk|)^2
        subject to  y >= 0,  sum_k y_jk <= 2 phi_j  for every criterion j

    Args:
        rho (CorrelationMatrix): Correlations between criteria.
        phi (WeightVector): Weights used as Shapley values.
        tol (float): KKT residual that certifies the solution.

    Returns:
        FitReport: The capacity, the objective, the tight constraints, the
        solver iterations and its KKT residual.

    Raises:
        NonConvergenceError: If the solver cannot certify a solution.
        DegenerateInputError: If the quadratic program is degenerate.
    """
    _check_inputs(rho, phi)
    n = rho.n
    off = _significant(rho)
    rows, cols = np.triu_indices(n, k=1)
    # A criterion with zero weight forces every incident index to zero.
    weighted = phi.w > 0.0
    free = np.flatnonzero((off[rows, cols] != 0.0) & weighted[rows] & weighted[cols])

    interaction = np.zeros((n, n))
    iterations = 0
    residual = 0.0
    if free.size:
        target = np.abs(off[rows[free], cols[free]])
        # Incidence of criteria in free pairs; y >= 0 is written as -y <= 0.
        incidence = np.zeros((n, free.size))
        incidence[rows[free], np.arange(free.size)] = 1.0
        incidence[cols[free], np.arange(free.size)] = 1.0
        touched = incidence.any(axis=1)
        A = np.vstack([incidence[touched], -np.eye(free.size)])
        b = np.concatenate([2.0 * phi.w[touched], np.zeros(free.size)])

        solver = ActiveSetQPSolver(tol=tol)
        result = solver.solve(np.eye(free.size), -target, A, b)
        magnitude = np.clip(result.x, 0.0, target)
        signed = -np.sign(off[rows[free], cols[free]]) * magnitude
        interaction[rows[free], cols[free]] = signed
        interaction[cols[free], rows[free]] = signed
        interaction[interaction == 0.0] = 0.0
        iterations = result.iterations
        residual = result.kkt_residual

    cap = Capacity2Additive(phi.w, interaction)
    report = FitReport(
        method="u1",
        capacity=cap,
        objective=_objective(interaction, rho),
        active_constraints=_active(cap),
        iterations=iterations,
        kkt_residual=residual,
    )
    logger.info(
        f"u1 fit: objective {report.objective:.6f} after {iterations} iterations, "
        f"tight criteria {list(report.active_constraints)}."
    )
    return report


@dataclass(frozen=True)
class InteractionRow:
    """
    One criterion pair of the correlation and interaction comparison.

    Attributes:
        pair (Tuple[int, int]): Zero-based criteria ``j < k``.
        rho (float): Pearson correlation.
        u2 (float): Interaction index learned by the consistent-ratio fit.
        u1 (float): Interaction index learned by the least-squares fit.
        strong (bool): Whether ``rho`` reaches the strong-correlation threshold.
    """

    pair: Tuple[int, int]
    rho: float
    u2: float
    u1: float
    strong: bool


def interaction_table(
    rho: CorrelationMatrix,
    u2: FitReport,
    u1: FitReport,
    threshold: float = STRONG_CORRELATION,
) -> List[InteractionRow]:
    """Lists every criterion pair with its correlation and both learned indices."""
    if u2.capacity.n != rho.n or u1.capacity.n != rho.n:
        raise DimensionMismatchError("Fits and correlations cover different criteria.")
    return [
        InteractionRow(
            pair=(j, k),
            rho=float(rho.rho[j, k]),
            u2=float(u2.capacity.interaction[j, k]),
            u1=float(u1.capacity.interaction[j, k]),
            strong=bool(rho.rho[j, k] >= threshold),
        )
        for j, k in u2.capacity.pairs()
    ]


def strong_correlations(
    rho: CorrelationMatrix, threshold: float = STRONG_CORRELATION
) -> List[Tuple[int, int]]:
    """Returns the pairs ``j < k`` whose correlation reaches ``threshold``."""
    rows, cols = np.triu_indices(rho.n, k=1)
    return [(int(j), int(k)) for j, k in zip(rows, cols) if rho.rho[j, k] >= threshold]


def pair_labels(criteria: Sequence[str]) -> List[str]:
    """Returns ``"a/b"`` labels for the criterion pairs in lexicographic order."""
    n = len(criteria)
    return [f"{criteria[j]}/{criteria[k]}" for j in range(n) for k in range(j + 1, n)]
