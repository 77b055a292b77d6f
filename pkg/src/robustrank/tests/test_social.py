import itertools
import unittest
from typing import Dict, Tuple

import numpy as np

from robustrank.core.models import PairwiseWinningMatrix
from robustrank.social.condorcet import (
    condorcet_ranking,
    condorcet_winner,
    majority_graph,
    schulze_strengths,
)


def pairwise_from_upper(
    upper: Dict[Tuple[int, int], float], m: int
) -> PairwiseWinningMatrix:
    c = np.zeros((m, m))
    for (i, k), value in upper.items():
        c[i, k] = value
        c[k, i] = 1.0 - value
    return PairwiseWinningMatrix(c)


def random_pairwise(rng: np.random.Generator, m: int) -> PairwiseWinningMatrix:
    pairs = itertools.combinations(range(m), 2)
    upper = {(i, k): float(rng.random()) for i, k in pairs}
    return pairwise_from_upper(upper, m)


def widest_path(c: np.ndarray, source: int, target: int) -> float:
    """Brute force over every simple path from source to target."""
    m = c.shape[0]
    inner = [v for v in range(m) if v not in (source, target)]
    best = 0.0
    for length in range(len(inner) + 1):
        for middle in itertools.permutations(inner, length):
            path = (source, *middle, target)
            best = max(best, min(c[a, b] for a, b in zip(path, path[1:])))
    return best


class TestMajorityGraph(unittest.TestCase):
    """Test suite for majority relations and Condorcet winners."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.c = pairwise_from_upper({(0, 1): 0.7, (0, 2): 0.6, (1, 2): 0.5}, 3)

    def test_edges_need_strict_majority(self) -> None:
        """Test that an exact half is not a majority."""
        graph = majority_graph(self.c)
        np.testing.assert_array_equal(
            graph.edges, [[False, True, True], [False, False, False], [False] * 3]
        )
        np.testing.assert_array_equal(graph.copeland, [2, 0, 0])

    def test_condorcet_winner(self) -> None:
        """Test the alternative beating every rival by majority."""
        self.assertEqual(condorcet_winner(self.c), 0)
        self.assertEqual(condorcet_ranking(self.c).ranking.order[0], 0)

    def test_no_condorcet_winner(self) -> None:
        """Test a matrix in which nobody beats everyone."""
        c = pairwise_from_upper({(0, 1): 0.5, (0, 2): 0.6, (1, 2): 0.6}, 3)
        self.assertIsNone(condorcet_winner(c))


class TestCondorcetRanking(unittest.TestCase):
    """Test suite for the Condorcet ranking with Schulze cycle resolution."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.rng = np.random.default_rng(2023)

    def test_acyclic_order(self) -> None:
        """Test that an acyclic majority graph is followed edge by edge."""
        upper = {
            (0, 1): 0.2,
            (0, 2): 0.3,
            (0, 3): 0.45,
            (1, 2): 0.4,
            (1, 3): 0.9,
            (2, 3): 0.8,
        }
        c = pairwise_from_upper(upper, 4)
        result = condorcet_ranking(c)
        self.assertFalse(result.has_cycle)
        self.assertEqual(result.ranking.order, (2, 1, 3, 0))
        self.assertEqual(result.condorcet_winner, 2)

    def test_three_cycle(self) -> None:
        """Test that a rock-paper-scissors cycle is detected and resolved."""
        c = pairwise_from_upper({(0, 1): 0.75, (1, 2): 0.75, (0, 2): 0.25}, 3)
        result = condorcet_ranking(c)
        self.assertTrue(result.has_cycle)
        self.assertIsNone(result.condorcet_winner)
        self.assertEqual(result.ranking.order, (0, 1, 2))
        self.assertEqual(condorcet_ranking(c).ranking, result.ranking)

    def test_cycle_resolved_by_strength(self) -> None:
        """Test that the weakest majority in a cycle is the one overturned."""
        c = pairwise_from_upper({(0, 1): 0.9, (1, 2): 0.8, (0, 2): 0.4}, 3)
        result = condorcet_ranking(c)
        self.assertTrue(result.has_cycle)
        self.assertEqual(result.ranking.order, (0, 1, 2))

    def test_winner_always_first(self) -> None:
        """Test that a Condorcet winner heads every resolved ranking."""
        for _ in range(100):
            c = random_pairwise(self.rng, int(self.rng.integers(3, 8)))
            result = condorcet_ranking(c)
            if result.condorcet_winner is not None:
                self.assertEqual(result.ranking.order[0], result.condorcet_winner)

    def test_acyclic_rankings_respect_majorities(self) -> None:
        """Test that no majority edge points backwards without a cycle."""
        for _ in range(100):
            c = random_pairwise(self.rng, 6)
            result = condorcet_ranking(c)
            if result.has_cycle:
                continue
            position = result.ranking.position
            for i, k in zip(*np.nonzero(c.c > 0.5)):
                self.assertLess(position[i], position[k])

    def test_cycle_dominated_by_fourth_alternative(self) -> None:
        """Test a three-cycle whose members all lose to a fourth alternative."""
        upper = {
            (0, 1): 0.9,
            (0, 2): 0.4,
            (0, 3): 0.3,
            (1, 2): 0.8,
            (1, 3): 0.2,
            (2, 3): 0.1,
        }
        c = pairwise_from_upper(upper, 4)
        result = condorcet_ranking(c)
        self.assertTrue(result.has_cycle)
        self.assertEqual(result.condorcet_winner, 3)
        self.assertEqual(result.ranking.order, (3, 0, 1, 2))
        beats = [
            sum(widest_path(c.c, i, k) > widest_path(c.c, k, i) for k in range(4))
            for i in range(4)
        ]
        self.assertEqual(beats, [2, 1, 0, 3])

    def test_raising_a_winning_index_never_demotes(self) -> None:
        """Test that strengthening i against k never moves i down the ranking."""
        for trial in range(1000):
            m = int(self.rng.integers(3, 7))
            c = random_pairwise(self.rng, m)
            i, k = (int(v) for v in self.rng.choice(m, size=2, replace=False))
            raised = np.array(c.c)
            raised[i, k] = self.rng.uniform(raised[i, k], 1.0)
            raised[k, i] = 1.0 - raised[i, k]
            before = condorcet_ranking(c).ranking.position[i]
            after = condorcet_ranking(PairwiseWinningMatrix(raised)).ranking.position[i]
            with self.subTest(trial=trial, m=m, pair=(i, k)):
                self.assertLessEqual(after, before)


class TestSchulzeStrengths(unittest.TestCase):
    """Test suite for the widest-path strengths."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.rng = np.random.default_rng(99)

    def test_matches_path_enumeration(self) -> None:
        """Test the dynamic program against brute force on 100 random matrices."""
        for _ in range(100):
            m = int(self.rng.integers(2, 7))
            c = random_pairwise(self.rng, m)
            p = schulze_strengths(c)
            for i, k in itertools.permutations(range(m), 2):
                self.assertAlmostEqual(p[i, k], widest_path(c.c, i, k), places=15)
            np.testing.assert_array_equal(np.diag(p), np.zeros(m))

    def test_strength_bounds_direct_edge(self) -> None:
        """Test that a path is never weaker than the direct comparison."""
        c = random_pairwise(self.rng, 5)
        p = schulze_strengths(c)
        off_diagonal = ~np.eye(5, dtype=bool)
        self.assertTrue(np.all(p[off_diagonal] >= c.c[off_diagonal]))


if __name__ == "__main__":
    unittest.main()
