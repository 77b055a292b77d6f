"""
Robust ranking from pairwise winning indices.

An alternative is preferred to another when it beats it in more than half of
the simulated rankings. When these majority preferences contain no cycle the
ranking follows them directly; otherwise the Schulze method orders the
alternatives by the strength of their widest paths through the winning
indices.
"""

import heapq
import logging
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from robustrank.core.models import (
    CondorcetResult,
    MajorityGraph,
    PairwiseWinningMatrix,
    Ranking,
)

logger = logging.getLogger(__name__)


def majority_graph(c: PairwiseWinningMatrix) -> MajorityGraph:
    """Builds the majority graph, with an edge ``i -> k`` iff ``c[i, k] > 0.5``."""
    edges = c.c > 0.5
    return MajorityGraph(edges=edges, strength=np.where(edges, c.c, 0.0))


def schulze_strengths(c: PairwiseWinningMatrix) -> NDArray[np.float64]:
    """
    Computes the widest-path strength between every ordered pair.

    The strength of a path is its weakest winning index and ``p[i, k]`` is
    the strongest path from ``i`` to ``k``, found with a Floyd-Warshall
    style dynamic program over all ordered pairs. The diagonal is zero.
    """
    p = np.array(c.c, dtype=np.float64)
    np.fill_diagonal(p, 0.0)
    for k in range(p.shape[0]):
        through = np.minimum(p[:, k][:, None], p[k, :][None, :])
        p = np.maximum(p, through)
        np.fill_diagonal(p, 0.0)
    return p


def condorcet_winner(c: PairwiseWinningMatrix) -> Optional[int]:
    """Returns the alternative beating every other by majority, if any."""
    m = c.m
    for i in range(m):
        if all(c.c[i, k] > 0.5 for k in range(m) if k != i):
            return i
    return None


def _topological_order(graph: MajorityGraph) -> Optional[List[int]]:
    """
    Orders the majority graph so that every edge points forward, preferring
    more majority wins and then the lower index. Returns None on a cycle.
    """
    edges = graph.edges
    m = edges.shape[0]
    copeland = graph.copeland
    indegree = edges.sum(axis=0).astype(int)
    ready: List[Tuple[int, int]] = [
        (-int(copeland[i]), i) for i in range(m) if indegree[i] == 0
    ]
    heapq.heapify(ready)

    order: List[int] = []
    while ready:
        _, i = heapq.heappop(ready)
        order.append(i)
        for k in np.flatnonzero(edges[i]):
            indegree[k] -= 1
            if indegree[k] == 0:
                heapq.heappush(ready, (-int(copeland[k]), int(k)))
    return order if len(order) == m else None


def condorcet_ranking(c: PairwiseWinningMatrix) -> CondorcetResult:
    """
    Derives a strict ranking from pairwise winning indices.

    Without majority cycles the ranking is the topological order of the
    majority graph. With a cycle, alternatives are ordered by the number of
    rivals they beat on Schulze strength, ``p[i, k] > p[k, i]``; remaining
    ties go to the larger Copeland score and then the lower index.

    Args:
        c (PairwiseWinningMatrix): Validated pairwise winning indices.

    Returns:
        CondorcetResult: The ranking, the cycle flag, the Condorcet winner if
        any, Copeland scores and Schulze strengths.
    """
    graph = majority_graph(c)
    copeland = graph.copeland
    strengths = schulze_strengths(c)
    winner = condorcet_winner(c)

    order = _topological_order(graph)
    has_cycle = order is None
    if order is None:
        beats = (strengths > strengths.T).sum(axis=1)
        keys = np.arange(c.m)
        order = np.lexsort((keys, -copeland, -beats)).tolist()
        logger.warning(
            "Majority preferences contain a cycle; resolved with Schulze strengths."
        )

    ranking = Ranking.from_order(order)
    logger.info(
        f"Condorcet ranking over {c.m} alternatives"
        f"{' (cycle resolved)' if has_cycle else ''}; winner {winner}."
    )
    return CondorcetResult(
        ranking=ranking,
        has_cycle=has_cycle,
        condorcet_winner=winner,
        copeland=copeland,
        strengths=strengths,
    )
