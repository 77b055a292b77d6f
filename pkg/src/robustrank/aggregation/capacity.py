"""
General-capacity Choquet integral and the transforms between a 2-additive
capacity and its explicit set-function form.

Everything here enumerates all ``2**n`` subsets and serves as an exact oracle
for the 2-additive fast path; it is not meant for large ``n``.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import beta

from robustrank.core.models import Capacity2Additive, CapacitySetFunction
from robustrank.exceptions import DimensionMismatchError


def _membership(n: int) -> NDArray[np.bool_]:
    """Returns a ``2**n x n`` table, row ``mask`` flags the members of that subset."""
    masks = np.arange(1 << n)
    return np.asarray(((masks[:, None] >> np.arange(n)) & 1).astype(bool))


def choquet_general_score(row: ArrayLike, mu: CapacitySetFunction) -> float:
    """
    Evaluates the discrete Choquet integral of one row against a capacity.

    Values are sorted ascending (equal values ordered by criterion index) and
    each increment ``g_(j) - g_(j-1)``, with ``g_(0) = 0``, is weighted by the
    capacity of the criteria at or above it.
    """
    g = np.asarray(row, dtype=np.float64)
    if g.shape != (mu.n,):
        raise DimensionMismatchError(f"Row of length {g.size} for {mu.n} criteria.")
    order = np.lexsort((np.arange(mu.n), g))

    total = 0.0
    previous = 0.0
    remaining = (1 << mu.n) - 1
    for j in order:
        total += (g[j] - previous) * mu.mu[remaining]
        previous = g[j]
        remaining &= ~(1 << int(j))
    return float(total)


def capacity_from_2additive(cap: Capacity2Additive) -> CapacitySetFunction:
    """
    Expands a 2-additive capacity into its set function through the Moebius
    representation: singleton masses ``phi_j - 1/2 sum_k I_jk`` and pair
    masses ``I_jk``.

    Raises:
        InvalidCapacityError: If the expanded set function is not monotone.
    """
    n = cap.n
    members = _membership(n)
    singleton = cap.phi - 0.5 * cap.interaction.sum(axis=1)
    mu = members.astype(np.float64) @ singleton
    for j, k in cap.pairs():
        coeff = cap.interaction[j, k]
        if coeff != 0.0:
            mu = mu + coeff * (members[:, j] & members[:, k])
    return CapacitySetFunction(n, mu)


def shapley_from_capacity(mu: CapacitySetFunction) -> NDArray[np.float64]:
    """
    Computes the Shapley value of every criterion.

    ``phi_j`` averages the marginal gain ``mu(A + j) - mu(A)`` over all ``A``
    not containing ``j``, weighted by ``(n-|A|-1)! |A|! / n!``.
    """
    n = mu.n
    masks = np.arange(1 << n)
    sizes = _membership(n).sum(axis=1)
    phi = np.zeros(n)
    for j in range(n):
        bit = 1 << j
        without = masks[(masks & bit) == 0]
        s = sizes[without]
        weight = beta(s + 1, n - s)
        phi[j] = float(np.sum(weight * (mu.mu[without | bit] - mu.mu[without])))
    return phi


def interaction_from_capacity(mu: CapacitySetFunction) -> NDArray[np.float64]:
    """
    Computes the Shapley interaction index of every criterion pair.

    Returns a symmetric ``n x n`` matrix with a zero diagonal.
    """
    n = mu.n
    interaction = np.zeros((n, n))
    if n < 2:
        return interaction
    masks = np.arange(1 << n)
    sizes = _membership(n).sum(axis=1)
    for j in range(n):
        for k in range(j + 1, n):
            bj, bk = 1 << j, 1 << k
            without = masks[(masks & (bj | bk)) == 0]
            s = sizes[without]
            weight = beta(s + 1, n - 1 - s)
            delta = (
                mu.mu[without | bj | bk]
                - mu.mu[without | bj]
                - mu.mu[without | bk]
                + mu.mu[without]
            )
            interaction[j, k] = interaction[k, j] = float(np.sum(weight * delta))
    return interaction
