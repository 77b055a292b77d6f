"""
A dense primal active-set solver for small convex quadratic programs

    minimize    1/2 x^T H x + g^T x
    subject to  A x <= b

with ``H`` symmetric positive definite. Each iteration solves the equality
constrained subproblem on the current working set through its KKT system and
either steps towards its minimizer, stopping at the first blocking constraint,
or drops the constraint with the most negative multiplier.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    NonConvergenceError,
)

logger = logging.getLogger(__name__)

_STEP_TOL = 1e-14
_MULTIPLIER_TOL = 1e-12
_DIRECTION_TOL = 1e-12


def _independent(A_w: NDArray[np.float64], row: NDArray[np.float64]) -> bool:
    """Whether ``row`` lies outside the row space of ``A_w``."""
    if A_w.shape[0] == 0:
        return bool(np.any(row != 0.0))
    stacked = np.vstack([A_w, row])
    return bool(np.linalg.matrix_rank(stacked) > np.linalg.matrix_rank(A_w))


@dataclass(frozen=True, eq=False)
class QPResult:
    """
    Solution of a quadratic program.

    Attributes:
        x (NDArray[np.float64]): The minimizer.
        multipliers (NDArray[np.float64]): One Lagrange multiplier per row of
            ``A``; zero for constraints outside the final working set.
        working_set (tuple[int, ...]): Constraints held active at the solution.
        iterations (int): Number of active-set iterations.
        kkt_residual (float): Largest violation among stationarity, primal
            feasibility, dual feasibility and complementarity.
    """

    x: NDArray[np.float64]
    multipliers: NDArray[np.float64]
    working_set: tuple[int, ...]
    iterations: int
    kkt_residual: float


def kkt_residual(
    H: NDArray[np.float64],
    g: NDArray[np.float64],
    A: NDArray[np.float64],
    b: NDArray[np.float64],
    x: NDArray[np.float64],
    multipliers: NDArray[np.float64],
) -> float:
    """
    Returns the infinity norm of the KKT conditions of ``min 1/2 x'Hx + g'x``
    subject to ``Ax <= b`` at the primal-dual pair ``(x, multipliers)``.
    """
    slack = A @ x - b
    parts = [
        np.abs(H @ x + g + A.T @ multipliers),
        np.maximum(slack, 0.0),
        np.maximum(-multipliers, 0.0),
        np.abs(multipliers * slack),
    ]
    return float(max((np.max(part) if part.size else 0.0) for part in parts))


class ActiveSetQPSolver:
    """
    Solves small dense convex QPs with inequality constraints only.
    """

    def __init__(self, tol: float = 1e-8, max_iter: int = 500):
        """
        Initializes the solver.

        Args:
            tol (float): Bound on the KKT residual that certifies a solution.
            max_iter (int): Iteration cap before giving up.
        """
        if tol <= 0.0:
            raise ValueError("tol must be positive.")
        self.tol = tol
        self.max_iter = max_iter

    def solve(
        self,
        H: ArrayLike,
        g: ArrayLike,
        A: ArrayLike,
        b: ArrayLike,
        x0: Optional[ArrayLike] = None,
    ) -> QPResult:
        """
        Solves the QP from a feasible starting point.

        Args:
            H (ArrayLike): ``k x k`` positive definite Hessian.
            g (ArrayLike): Linear term of length ``k``.
            A (ArrayLike): ``p x k`` inequality matrix.
            b (ArrayLike): Right-hand side of length ``p``.
            x0 (Optional[ArrayLike]): Feasible start; defaults to the origin.

        Returns:
            QPResult: The certified minimizer and its multipliers.

        Raises:
            DimensionMismatchError: If the problem data disagree in shape.
            DegenerateInputError: If the start is infeasible or a KKT system is
                singular.
            NonConvergenceError: If the iteration cap is hit or the final KKT
                residual exceeds ``tol``.
        """
        H_ = np.asarray(H, dtype=np.float64)
        g_ = np.asarray(g, dtype=np.float64)
        A_ = np.asarray(A, dtype=np.float64)
        b_ = np.asarray(b, dtype=np.float64)
        k = g_.size
        if H_.shape != (k, k) or A_.ndim != 2 or A_.shape[1] != k:
            raise DimensionMismatchError("QP data have inconsistent shapes.")
        if b_.shape != (A_.shape[0],):
            raise DimensionMismatchError("Constraint bounds have the wrong size.")

        x = np.zeros(k) if x0 is None else np.array(x0, dtype=np.float64)
        if np.any(A_ @ x - b_ > self.tol):
            raise DegenerateInputError("The starting point of the QP is infeasible.")

        working: List[int] = []
        multipliers = np.zeros(A_.shape[0])

        for iteration in range(1, self.max_iter + 1):
            step, lam = self._equality_step(H_, H_ @ x + g_, A_[working])

            scale = max(1.0, float(np.linalg.norm(x, np.inf)))
            if np.linalg.norm(step, np.inf) <= _STEP_TOL * scale:
                if lam.size == 0 or lam.min() >= -_MULTIPLIER_TOL:
                    multipliers = np.zeros(A_.shape[0])
                    multipliers[working] = np.maximum(lam, 0.0)
                    return self._certify(
                        H_, g_, A_, b_, x, multipliers, working, iteration
                    )
                dropped = working.pop(int(np.argmin(lam)))
                logger.debug(f"QP iteration {iteration}: dropped constraint {dropped}.")
                continue

            alpha, blocking = self._step_length(A_, b_, x, step, working)
            x = x + alpha * step
            if blocking is not None:
                working.append(blocking)
                logger.debug(
                    f"QP iteration {iteration}: step {alpha:.3e}, "
                    f"added constraint {blocking}."
                )

        raise NonConvergenceError(self.max_iter)

    @staticmethod
    def _equality_step(
        H: NDArray[np.float64], gradient: NDArray[np.float64], A_w: NDArray[np.float64]
    ) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Solves ``[H A_w'; A_w 0] [p; lam] = [-gradient; 0]``."""
        k = gradient.size
        w = A_w.shape[0]
        kkt = np.block([[H, A_w.T], [A_w, np.zeros((w, w))]])
        rhs = np.concatenate([-gradient, np.zeros(w)])
        try:
            solution = np.linalg.solve(kkt, rhs)
        except np.linalg.LinAlgError as e:
            raise DegenerateInputError(
                "Singular KKT system: the working set is linearly dependent."
            ) from e
        return solution[:k], solution[k:]

    @staticmethod
    def _step_length(
        A: NDArray[np.float64],
        b: NDArray[np.float64],
        x: NDArray[np.float64],
        step: NDArray[np.float64],
        working: List[int],
    ) -> tuple[float, Optional[int]]:
        """
        Returns the longest feasible step in ``[0, 1]`` and its blocking row.

        Rows that the step leaves unchanged up to rounding, or that depend
        linearly on the working set, never block.
        """
        directional = A @ step
        residual = b - A @ x
        scale = np.linalg.norm(A, axis=1) * np.linalg.norm(step)
        candidates: List[tuple[float, int]] = []
        for i in range(A.shape[0]):
            if i in working or directional[i] <= _DIRECTION_TOL * scale[i]:
                continue
            ratio = max(residual[i], 0.0) / directional[i]
            if ratio < 1.0:
                candidates.append((ratio, i))
        for ratio, i in sorted(candidates):
            if _independent(A[working], A[i]):
                return ratio, i
        return 1.0, None

    def _certify(
        self,
        H: NDArray[np.float64],
        g: NDArray[np.float64],
        A: NDArray[np.float64],
        b: NDArray[np.float64],
        x: NDArray[np.float64],
        multipliers: NDArray[np.float64],
        working: List[int],
        iterations: int,
    ) -> QPResult:
        residual = kkt_residual(H, g, A, b, x, multipliers)
        if residual > self.tol:
            raise NonConvergenceError(
                iterations,
                f"QP stopped after {iterations} iterations with KKT residual "
                f"{residual:.3e} above {self.tol:.1e}.",
            )
        logger.debug(
            f"QP solved in {iterations} iterations, KKT residual {residual:.3e}."
        )
        return QPResult(x, multipliers, tuple(sorted(working)), iterations, residual)
