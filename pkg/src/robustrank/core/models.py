"""
Core data models for robustrank.

This module defines the immutable data structures shared by every stage of the
engine: the decision matrix and its weight and score vectors, rankings,
correlation matrices, capacities, and the descriptive outputs of the stochastic
acceptability analysis. Invariants are checked at construction time so that a
model instance that exists is always a valid one.
"""

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from robustrank.exceptions import (
    ConfigurationError,
    DataError,
    DimensionMismatchError,
    DuplicateIdentifierError,
    InvalidCapacityError,
    InvalidMatrixError,
    NonFiniteValueError,
    TooFewRowsOrColsError,
)

SIMPLEX_TOL = 1e-9
CAPACITY_TOL = 1e-9

# Capacity set functions are enumerated explicitly; beyond this size they are
# no longer usable as an oracle.
MAX_SET_FUNCTION_CRITERIA = 20


def _frozen(values: ArrayLike, dtype: Any = np.float64) -> NDArray[Any]:
    """Returns a read-only copy of ``values`` with the given dtype."""
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def _check_unique(identifiers: Sequence[str], kind: str) -> None:
    seen = set()
    for identifier in identifiers:
        if identifier in seen:
            raise DuplicateIdentifierError(identifier, kind)
        seen.add(identifier)


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """
    Performance table of ``m`` alternatives evaluated on ``n`` criteria.

    Attributes:
        alternatives (Tuple[str, ...]): Alternative identifiers, one per row.
        criteria (Tuple[str, ...]): Criterion identifiers, one per column.
        values (NDArray[np.float64]): ``m x n`` matrix, ``values[i, j]`` is the
            performance of alternative ``i`` on criterion ``j``.
    """

    alternatives: Tuple[str, ...]
    criteria: Tuple[str, ...]
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        values = _frozen(self.values)
        object.__setattr__(self, "values", values)

        if values.ndim != 2:
            raise DimensionMismatchError("A decision matrix must be two-dimensional.")
        rows, cols = values.shape
        if rows < 2 or cols < 2:
            raise TooFewRowsOrColsError(rows, cols)
        if len(self.alternatives) != rows or len(self.criteria) != cols:
            raise DimensionMismatchError(
                f"Labels ({len(self.alternatives)}x{len(self.criteria)}) do not "
                f"match values ({rows}x{cols})."
            )
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            row, col = (int(v) for v in bad[0])
            raise NonFiniteValueError(row, col)
        _check_unique(self.alternatives, "alternative")
        _check_unique(self.criteria, "criterion")

    @property
    def m(self) -> int:
        """Number of alternatives."""
        return int(self.values.shape[0])

    @property
    def n(self) -> int:
        """Number of criteria."""
        return int(self.values.shape[1])

    def alternative_index(self, identifier: str) -> int:
        """Returns the row index of an alternative identifier."""
        try:
            return self.alternatives.index(identifier)
        except ValueError as e:
            raise DataError(f"Unknown alternative '{identifier}'.") from e

    def criterion_index(self, identifier: str) -> int:
        """Returns the column index of a criterion identifier."""
        try:
            return self.criteria.index(identifier)
        except ValueError as e:
            raise DataError(f"Unknown criterion '{identifier}'.") from e

    def with_values(self, values: ArrayLike) -> "DecisionMatrix":
        """Returns a copy carrying the same labels and new values."""
        return DecisionMatrix(self.alternatives, self.criteria, np.asarray(values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionMatrix):
            return NotImplemented
        return (
            self.alternatives == other.alternatives
            and self.criteria == other.criteria
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class WeightVector:
    """
    Criteria weights lying on the probability simplex.

    Attributes:
        w (NDArray[np.float64]): Non-negative weights summing to one.
    """

    w: NDArray[np.float64]

    def __post_init__(self) -> None:
        w = _frozen(self.w)
        object.__setattr__(self, "w", w)
        if w.ndim != 1 or w.size < 1:
            raise ConfigurationError("A weight vector must be one-dimensional.")
        if not np.all(np.isfinite(w)):
            raise ConfigurationError("Weights must be finite.")
        if np.any(w < 0.0):
            raise ConfigurationError(f"Weights must be non-negative, got {w}.")
        total = float(np.sum(w))
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ConfigurationError(f"Weights must sum to 1, got {total:.12f}.")

    @property
    def n(self) -> int:
        """Number of criteria covered by the vector."""
        return int(self.w.size)

    @classmethod
    def normalized(cls, raw: ArrayLike) -> "WeightVector":
        """Builds a weight vector by dividing non-negative raw values by their sum."""
        array = np.asarray(raw, dtype=np.float64)
        total = float(np.sum(array))
        if total <= 0.0:
            raise ConfigurationError("Raw weights must have a positive sum.")
        return cls(array / total)


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """
    Aggregated scores, one per alternative.

    Attributes:
        s (NDArray[np.float64]): Finite scores.
    """

    s: NDArray[np.float64]

    def __post_init__(self) -> None:
        s = _frozen(self.s)
        object.__setattr__(self, "s", s)
        if s.ndim != 1:
            raise DimensionMismatchError("A score vector must be one-dimensional.")
        bad = np.flatnonzero(~np.isfinite(s))
        if bad.size:
            raise NonFiniteValueError(int(bad[0]), 0, "Scores must be finite.")

    @property
    def m(self) -> int:
        """Number of scored alternatives."""
        return int(self.s.size)


@dataclass(frozen=True)
class Ranking:
    """
    A strict total order over alternatives.

    Attributes:
        order (Tuple[int, ...]): Zero-based alternative indices, best first.
        position (Tuple[int, ...]): One-based rank of each alternative, so that
            ``position[order[k]] == k + 1``.
    """

    order: Tuple[int, ...]
    position: Tuple[int, ...]

    def __post_init__(self) -> None:
        order = tuple(int(i) for i in self.order)
        position = tuple(int(p) for p in self.position)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "position", position)
        m = len(order)
        if len(position) != m or sorted(order) != list(range(m)):
            raise InvalidMatrixError("Ranking order must be a permutation.")
        for rank, alternative in enumerate(order, start=1):
            if position[alternative] != rank:
                raise InvalidMatrixError("Ranking order and position disagree.")

    @classmethod
    def from_order(cls, order: Iterable[int]) -> "Ranking":
        """Builds a ranking from a best-first sequence of alternative indices."""
        order_t = tuple(int(i) for i in order)
        position = [0] * len(order_t)
        for rank, alternative in enumerate(order_t, start=1):
            if 0 <= alternative < len(order_t):
                position[alternative] = rank
        return cls(order_t, tuple(position))

    @classmethod
    def from_positions(cls, position: Iterable[int]) -> "Ranking":
        """Builds a ranking from one-based positions indexed by alternative."""
        position_t = tuple(int(p) for p in position)
        order = [0] * len(position_t)
        for alternative, rank in enumerate(position_t):
            if 1 <= rank <= len(position_t):
                order[rank - 1] = alternative
        return cls(tuple(order), position_t)

    @property
    def m(self) -> int:
        """Number of ranked alternatives."""
        return len(self.order)

    def labels(self, alternatives: Sequence[str]) -> Tuple[str, ...]:
        """Returns the alternative identifiers in ranking order."""
        if len(alternatives) != self.m:
            raise DimensionMismatchError("Label count does not match the ranking.")
        return tuple(alternatives[i] for i in self.order)


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    """
    Symmetric matrix of pairwise criterion correlations.

    Attributes:
        rho (NDArray[np.float64]): ``n x n`` matrix with unit diagonal.
    """

    rho: NDArray[np.float64]

    def __post_init__(self) -> None:
        rho = _frozen(self.rho)
        object.__setattr__(self, "rho", rho)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] < 2:
            raise DimensionMismatchError("A correlation matrix must be square, n >= 2.")
        if not np.all(np.isfinite(rho)):
            raise DataError("Correlations must be finite.")
        if not np.allclose(np.diag(rho), 1.0, rtol=0.0, atol=1e-12):
            raise DataError("Correlation matrix diagonal must be 1.")
        if not np.array_equal(rho, rho.T):
            raise DataError("Correlation matrix must be symmetric.")
        if np.any(np.abs(rho) > 1.0):
            raise DataError("Correlations must lie in [-1, 1].")

    @property
    def n(self) -> int:
        """Number of criteria."""
        return int(self.rho.shape[0])

    @classmethod
    def from_pairs(
        cls, n: int, pairs: dict[Tuple[int, int], float]
    ) -> "CorrelationMatrix":
        """Builds a matrix from zero-based ``(j, k) -> rho`` entries, ``j != k``."""
        rho = np.eye(n)
        for (j, k), value in pairs.items():
            rho[j, k] = value
            rho[k, j] = value
        return cls(rho)


@dataclass(frozen=True, eq=False)
class Capacity2Additive:
    """
    A 2-additive capacity given by Shapley values and interaction indices.

    Attributes:
        phi (NDArray[np.float64]): Shapley values, non-negative, summing to one.
        interaction (NDArray[np.float64]): Symmetric ``n x n`` matrix of Shapley
            interaction indices with zero diagonal.
    """

    phi: NDArray[np.float64]
    interaction: NDArray[np.float64]

    def __post_init__(self) -> None:
        phi = _frozen(self.phi)
        interaction = _frozen(self.interaction)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "interaction", interaction)

        n = phi.size
        if phi.ndim != 1 or interaction.shape != (n, n):
            raise DimensionMismatchError(
                f"Shapley vector ({phi.shape}) and interaction matrix "
                f"({interaction.shape}) disagree."
            )
        if not (np.all(np.isfinite(phi)) and np.all(np.isfinite(interaction))):
            raise InvalidCapacityError("Capacity parameters must be finite.")
        if not np.array_equal(interaction, interaction.T):
            raise InvalidCapacityError("Interaction matrix must be symmetric.")
        if np.any(np.diag(interaction) != 0.0):
            raise InvalidCapacityError("Interaction matrix diagonal must be zero.")
        if np.any(np.abs(interaction) > 1.0):
            raise InvalidCapacityError("Interaction indices must lie in [-1, 1].")
        if np.any(phi < -CAPACITY_TOL):
            raise InvalidCapacityError("Shapley values must be non-negative.")
        if abs(float(np.sum(phi)) - 1.0) > CAPACITY_TOL:
            raise InvalidCapacityError(
                f"Shapley values must sum to 1, got {float(np.sum(phi)):.12f}."
            )
        slack = self.monotonicity_slack()
        if np.any(slack < -CAPACITY_TOL):
            j = int(np.argmin(slack))
            raise InvalidCapacityError(
                f"Monotonicity fails for criterion {j}: slack {slack[j]:.3e}."
            )

    @property
    def n(self) -> int:
        """Number of criteria."""
        return int(self.phi.size)

    def monotonicity_slack(self) -> NDArray[np.float64]:
        """Returns ``phi_j - 1/2 * sum_k |I_jk|`` for every criterion."""
        return np.asarray(self.phi - 0.5 * np.abs(self.interaction).sum(axis=1))

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Returns the zero-based criterion pairs ``j < k`` in lexicographic order."""
        return tuple((j, k) for j in range(self.n) for k in range(j + 1, self.n))

    @classmethod
    def additive(cls, phi: ArrayLike) -> "Capacity2Additive":
        """Builds the interaction-free capacity for the given Shapley values."""
        phi_arr = np.asarray(phi, dtype=np.float64)
        return cls(phi_arr, np.zeros((phi_arr.size, phi_arr.size)))


@dataclass(frozen=True, eq=False)
class CapacitySetFunction:
    """
    A capacity enumerated over every subset of the criteria.

    Subsets are encoded as bit masks: bit ``j`` set means criterion ``j`` belongs
    to the subset, so ``mu[0]`` is the empty set and ``mu[2**n - 1]`` is ``N``.

    Attributes:
        n (int): Number of criteria.
        mu (NDArray[np.float64]): ``2**n`` capacity coefficients.
    """

    n: int
    mu: NDArray[np.float64]

    def __post_init__(self) -> None:
        mu = _frozen(self.mu)
        object.__setattr__(self, "mu", mu)
        if not 1 <= self.n <= MAX_SET_FUNCTION_CRITERIA:
            raise InvalidCapacityError(
                f"Set functions are supported for 1..{MAX_SET_FUNCTION_CRITERIA} "
                f"criteria, got {self.n}."
            )
        if mu.shape != (1 << self.n,):
            raise InvalidCapacityError(f"Expected {1 << self.n} coefficients.")
        if not np.all(np.isfinite(mu)):
            raise InvalidCapacityError("Capacity coefficients must be finite.")
        if abs(mu[0]) > CAPACITY_TOL or abs(mu[-1] - 1.0) > CAPACITY_TOL:
            raise InvalidCapacityError("A capacity needs mu(empty)=0 and mu(N)=1.")
        masks = np.arange(1 << self.n)
        for j in range(self.n):
            bit = 1 << j
            without = masks[(masks & bit) == 0]
            gain = mu[without | bit] - mu[without]
            if np.any(gain < -CAPACITY_TOL):
                raise InvalidCapacityError(
                    f"Monotonicity fails when adding criterion {j}."
                )

    def value(self, subset: Iterable[int]) -> float:
        """Returns the capacity of a subset given as zero-based criterion indices."""
        mask = 0
        for j in subset:
            mask |= 1 << int(j)
        return float(self.mu[mask])


@dataclass(frozen=True)
class FitReport:
    """
    Outcome of learning interaction indices from a correlation matrix.

    Attributes:
        method (str): ``"u1"`` or ``"u2"``.
        capacity (Capacity2Additive): The fitted capacity.
        ratio_t (Optional[float]): Consistent ratio, present for ``u2`` only.
        objective (Optional[float]): Final ``sum (I + rho)^2``, ``u1`` only.
        active_constraints (Tuple[int, ...]): Criteria whose monotonicity
            constraint is tight.
        iterations (int): Solver iterations (0 for the closed form).
        kkt_residual (Optional[float]): Optimality certificate of ``u1``.
    """

    method: str
    capacity: Capacity2Additive
    ratio_t: Optional[float] = None
    objective: Optional[float] = None
    active_constraints: Tuple[int, ...] = ()
    iterations: int = 0
    kkt_residual: Optional[float] = None

    def __post_init__(self) -> None:
        if self.ratio_t is not None and not 0.0 <= self.ratio_t <= 1.0:
            raise InvalidCapacityError(
                f"Ratio t must lie in [0, 1], got {self.ratio_t}."
            )


SAMPLER_KINDS = ("uniform", "ordinal", "fixed")
AGGREGATOR_KINDS = ("weighted_sum", "choquet")


@dataclass(frozen=True)
class SmaaConfig:
    """
    Configuration of a stochastic acceptability run.

    Attributes:
        samples (int): Number of Monte Carlo draws ``S``.
        seed (int): Master seed; each draw derives its own substream from it.
        sampler (str): ``"uniform"``, ``"ordinal"`` or ``"fixed"``.
        aggregator (str): ``"weighted_sum"`` or ``"choquet"``.
        preference_order (Optional[Tuple[int, ...]]): Zero-based criteria, most
            important first, required by the ordinal sampler.
        fixed_weights (Optional[Tuple[float, ...]]): Point mass of the fixed sampler.
        chunk_size (int): Draws per unit of work; fixed so that results do not
            depend on the number of workers.
        workers (int): Number of worker threads.
        tie_credit (float): Credit given to each side of a tied pairwise comparison.
    """

    samples: int = 10_000
    seed: int = 20231126
    sampler: str = "uniform"
    aggregator: str = "weighted_sum"
    preference_order: Optional[Tuple[int, ...]] = None
    fixed_weights: Optional[Tuple[float, ...]] = None
    chunk_size: int = 256
    workers: int = 1
    tie_credit: float = 0.5

    def __post_init__(self) -> None:
        if isinstance(self.samples, bool) or int(self.samples) < 1:
            raise ConfigurationError(f"samples must be >= 1, got {self.samples}.")
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer.")
        if self.sampler not in SAMPLER_KINDS:
            raise ConfigurationError(
                f"Unknown sampler '{self.sampler}'. Available: {SAMPLER_KINDS}"
            )
        if self.aggregator not in AGGREGATOR_KINDS:
            raise ConfigurationError(
                f"Unknown aggregator '{self.aggregator}'. Available: {AGGREGATOR_KINDS}"
            )
        if self.sampler == "ordinal":
            if self.preference_order is None:
                raise ConfigurationError(
                    "The ordinal sampler needs a preference order."
                )
            order = tuple(int(j) for j in self.preference_order)
            if sorted(order) != list(range(len(order))):
                raise ConfigurationError(
                    f"Preference order must be a permutation, got {order}."
                )
            object.__setattr__(self, "preference_order", order)
        if self.sampler == "fixed" and self.fixed_weights is None:
            raise ConfigurationError("The fixed sampler needs fixed_weights.")
        if self.chunk_size < 1 or self.workers < 1:
            raise ConfigurationError("chunk_size and workers must be positive.")
        if not 0.0 <= self.tie_credit <= 1.0:
            raise ConfigurationError("tie_credit must lie in [0, 1].")


@dataclass(frozen=True, eq=False)
class AcceptabilityMatrix:
    """
    Rank acceptability indices.

    Attributes:
        b (NDArray[np.float64]): ``m x m`` matrix; ``b[i, s]`` is the share of
            draws in which alternative ``i`` occupies rank ``s + 1``.
    """

    b: NDArray[np.float64]

    def __post_init__(self) -> None:
        b = _frozen(self.b)
        object.__setattr__(self, "b", b)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise InvalidMatrixError("An acceptability matrix must be square.")
        if np.any(b < 0.0) or np.any(b > 1.0):
            raise InvalidMatrixError("Acceptability indices must lie in [0, 1].")
        if not (
            np.allclose(b.sum(axis=1), 1.0, rtol=0.0, atol=SIMPLEX_TOL)
            and np.allclose(b.sum(axis=0), 1.0, rtol=0.0, atol=SIMPLEX_TOL)
        ):
            raise InvalidMatrixError("Acceptability rows and columns must sum to 1.")


@dataclass(frozen=True, eq=False)
class PairwiseWinningMatrix:
    """
    Pairwise winning indices.

    Attributes:
        c (NDArray[np.float64]): ``m x m`` matrix with zero diagonal; ``c[i, k]``
            is the probability that alternative ``i`` scores above ``k``.
    """

    c: NDArray[np.float64]

    def __post_init__(self) -> None:
        c = _frozen(self.c)
        object.__setattr__(self, "c", c)
        if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] < 2:
            raise InvalidMatrixError(
                "A pairwise winning matrix must be square, m >= 2."
            )
        if not np.all(np.isfinite(c)) or np.any(c < 0.0) or np.any(c > 1.0):
            raise InvalidMatrixError("Pairwise winning indices must lie in [0, 1].")
        if np.any(np.diag(c) != 0.0):
            raise InvalidMatrixError("Pairwise winning diagonal must be zero.")
        off = ~np.eye(c.shape[0], dtype=bool)
        if np.any(np.abs((c + c.T)[off] - 1.0) > SIMPLEX_TOL):
            raise InvalidMatrixError("c[i, k] + c[k, i] must equal 1.")

    @property
    def m(self) -> int:
        """Number of alternatives."""
        return int(self.c.shape[0])


@dataclass(frozen=True)
class CentralWeightReport:
    """
    Central weight vectors and confidence factors.

    Attributes:
        central_weights (Tuple[Optional[WeightVector], ...]): Mean weights of the
            draws in which each alternative ranks first; ``None`` when it never does.
        confidence (Tuple[float, ...]): Confidence factor per alternative.
        degenerate_confidence (bool): True when criteria are deterministic and the
            confidence factor reduces to a 0/1 indicator.
    """

    central_weights: Tuple[Optional[WeightVector], ...]
    confidence: Tuple[float, ...]
    degenerate_confidence: bool = True


@dataclass(frozen=True, eq=False)
class SmaaResult:
    """
    Everything a stochastic acceptability run produces.

    Attributes:
        acceptability (AcceptabilityMatrix): Rank acceptability indices.
        pairwise (PairwiseWinningMatrix): Pairwise winning indices.
        central (CentralWeightReport): Central weights and confidence factors.
        positions (NDArray[np.int64]): ``S x m`` one-based positions per draw.
        weights (NDArray[np.float64]): ``S x n`` weight draws.
        shrunk_draws (int): Draws whose interactions had to be shrunk.
    """

    acceptability: AcceptabilityMatrix
    pairwise: PairwiseWinningMatrix
    central: CentralWeightReport
    positions: NDArray[np.int64]
    weights: NDArray[np.float64]
    shrunk_draws: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", _frozen(self.positions, np.int64))
        object.__setattr__(self, "weights", _frozen(self.weights))

    @property
    def samples(self) -> int:
        """Number of draws."""
        return int(self.positions.shape[0])

    def sample_ranking(self, index: int) -> Ranking:
        """Returns the ranking produced by one draw."""
        return Ranking.from_positions(self.positions[index])


@dataclass(frozen=True, eq=False)
class MajorityGraph:
    """
    Majority relation derived from pairwise winning indices.

    Attributes:
        edges (NDArray[np.bool_]): ``edges[i, k]`` iff ``c[i, k] > 0.5``.
        strength (NDArray[np.float64]): Edge strength, the winning index itself.
    """

    edges: NDArray[np.bool_]
    strength: NDArray[np.float64]

    def __post_init__(self) -> None:
        edges = _frozen(self.edges, np.bool_)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "strength", _frozen(self.strength))
        if np.any(edges & edges.T):
            raise InvalidMatrixError("A majority graph cannot contain 2-cycles.")

    @property
    def copeland(self) -> NDArray[np.int64]:
        """Number of majority wins of each alternative."""
        return np.asarray(self.edges.sum(axis=1), dtype=np.int64)


@dataclass(frozen=True, eq=False)
class CondorcetResult:
    """
    A robust ranking derived from pairwise winning indices.

    Attributes:
        ranking (Ranking): The strict total order.
        has_cycle (bool): Whether the majority graph contains a cycle.
        condorcet_winner (Optional[int]): Alternative beating all others, if any.
        copeland (NDArray[np.int64]): Majority win counts.
        strengths (NDArray[np.float64]): Widest-path strengths ``p[i, k]``.
    """

    ranking: Ranking
    has_cycle: bool
    condorcet_winner: Optional[int]
    copeland: NDArray[np.int64]
    strengths: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "copeland", _frozen(self.copeland, np.int64))
        object.__setattr__(self, "strengths", _frozen(self.strengths))


METHODOLOGIES = ("M1", "M2", "M3")
AGGREGATOR_FAMILIES = ("ws", "ci_u1", "ci_u2")
WEIGHT_MODES = ("deterministic", "uniform", "ordinal")


@dataclass(frozen=True)
class RunSpec:
    """
    One end-to-end run of a methodology.

    Attributes:
        methodology (str): ``"M1"``, ``"M2"`` or ``"M3"``.
        families (Tuple[str, ...]): Aggregator families to evaluate.
        weight_mode (str): ``"deterministic"``, ``"uniform"`` or ``"ordinal"``.
        weights (Optional[WeightVector]): Deterministic weights (Methodology 1,
            and the reference ranking of Methodologies 2 and 3).
        smaa (SmaaConfig): Simulation settings for Methodologies 2 and 3.
        comparisons (Tuple[Tuple[str, str], ...]): Named ranking pairs to score.
    """

    methodology: str
    families: Tuple[str, ...] = AGGREGATOR_FAMILIES
    weight_mode: str = "deterministic"
    weights: Optional[WeightVector] = None
    smaa: SmaaConfig = field(default_factory=SmaaConfig)
    comparisons: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.methodology not in METHODOLOGIES:
            raise ConfigurationError(f"Unknown methodology '{self.methodology}'.")
        unknown = [f for f in self.families if f not in AGGREGATOR_FAMILIES]
        if unknown or not self.families:
            raise ConfigurationError(f"Unknown aggregator families: {unknown}.")
        if self.weight_mode not in WEIGHT_MODES:
            raise ConfigurationError(f"Unknown weight mode '{self.weight_mode}'.")
        if self.methodology == "M1":
            if self.weight_mode != "deterministic" or self.weights is None:
                raise ConfigurationError(
                    "Methodology 1 runs on deterministic weights only."
                )
        elif self.weight_mode == "deterministic":
            raise ConfigurationError(
                f"{self.methodology} samples weights: use 'uniform' or 'ordinal'."
            )
