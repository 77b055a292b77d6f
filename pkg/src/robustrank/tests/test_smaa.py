import math
import unittest

import numpy as np

from robustrank.aggregation.strategies import weighted_sum_score
from robustrank.core.models import DecisionMatrix, SmaaConfig, WeightVector
from robustrank.core.validation import ranking_from_scores
from robustrank.exceptions import ConfigurationError, DimensionMismatchError
from robustrank.services.sample_executor import SampleExecutor
from robustrank.smaa.samplers import sample_ordinal, sample_uniform_simplex
from robustrank.smaa.simulation import draw_rng, positions_from_scores, run_smaa
from robustrank.tests.fixtures import random_matrix


class TestSamplers(unittest.TestCase):
    """Test suite for the weight samplers."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.rng = np.random.default_rng(5)

    def test_uniform_draw_on_simplex(self) -> None:
        """Test that uniform draws are non-negative and sum to one."""
        for _ in range(100):
            w = sample_uniform_simplex(7, self.rng).w
            self.assertTrue(np.all(w >= 0.0))
            self.assertAlmostEqual(float(w.sum()), 1.0, places=12)

    def test_ordinal_draw_respects_order(self) -> None:
        """Test that ordinal draws decrease along the preference order."""
        order = (4, 5, 2, 3, 0, 1, 6)
        for _ in range(100):
            w = sample_ordinal(7, order, self.rng).w
            self.assertTrue(np.all(np.diff(w[list(order)]) <= 0.0))

    def test_ordinal_rejects_bad_order(self) -> None:
        """Test that the preference order must be a permutation."""
        with self.assertRaises(ConfigurationError):
            sample_ordinal(3, (0, 0, 1), self.rng)

    def test_single_criterion(self) -> None:
        """Test that sampling needs at least two criteria."""
        with self.assertRaises(ConfigurationError):
            sample_uniform_simplex(1, self.rng)

    def test_draw_streams_are_reproducible(self) -> None:
        """Test that a draw's stream depends only on the seed and its index."""
        first = draw_rng(42, 7).random(3)
        np.testing.assert_array_equal(first, draw_rng(42, 7).random(3))
        self.assertFalse(np.array_equal(first, draw_rng(42, 8).random(3)))


class TestPositionsFromScores(unittest.TestCase):
    """Test suite for ranking score columns."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.scores = np.array([[0.2, 0.5], [0.9, 0.5], [0.5, 0.1]])

    def test_positions(self) -> None:
        """Test one-based positions with ties broken by index."""
        positions = positions_from_scores(self.scores)
        np.testing.assert_array_equal(positions, [[3, 1, 2], [1, 2, 3]])

    def test_matches_ranking_from_scores(self) -> None:
        """Test agreement with the deterministic ranking."""
        positions = positions_from_scores(self.scores)
        for column in range(2):
            ranking = ranking_from_scores(self.scores[:, column])
            self.assertEqual(tuple(positions[column]), ranking.position)


class TestRunSmaa(unittest.TestCase):
    """Test suite for the Monte Carlo acceptability analysis."""

    def setUp(self) -> None:
        """Set up the test case."""
        # A beats B exactly when w1 > 3/7.
        self.pair = DecisionMatrix(
            ("A", "B"), ("x", "y"), np.array([[1.0, 0.0], [0.0, 0.75]])
        )
        self.dm = random_matrix(np.random.default_rng(17), 12, 4)

    def test_analytic_winning_probability(self) -> None:
        """Test the pairwise winning index against its closed form 4/7."""
        samples = 10_000
        result = run_smaa(self.pair, SmaaConfig(samples=samples, seed=1))
        expected = 4.0 / 7.0
        tolerance = 3.0 * math.sqrt(expected * (1.0 - expected) / samples)
        self.assertAlmostEqual(result.pairwise.c[0, 1], expected, delta=tolerance)
        self.assertAlmostEqual(
            result.acceptability.b[0, 0], result.pairwise.c[0, 1], places=12
        )

    def test_indices_are_distributions(self) -> None:
        """Test the row and column sums of the acceptability indices."""
        result = run_smaa(self.dm, SmaaConfig(samples=1000, seed=3))
        b = result.acceptability.b
        np.testing.assert_allclose(b.sum(axis=0), np.ones(12), atol=1e-9)
        np.testing.assert_allclose(b.sum(axis=1), np.ones(12), atol=1e-9)
        c = result.pairwise.c
        off_diagonal = ~np.eye(12, dtype=bool)
        np.testing.assert_allclose((c + c.T)[off_diagonal], 1.0, atol=1e-9)
        self.assertEqual(result.samples, 1000)
        self.assertEqual(result.weights.shape, (1000, 4))

    def test_independent_of_worker_count(self) -> None:
        """Test that one and four workers give bitwise identical results."""
        cfg = SmaaConfig(samples=1500, seed=9, chunk_size=64)
        serial = run_smaa(self.dm, cfg)
        parallel = run_smaa(
            self.dm, SmaaConfig(samples=1500, seed=9, chunk_size=64, workers=4)
        )
        with SampleExecutor(3) as pool:
            shared = run_smaa(self.dm, cfg, executor=pool)
        for other in (parallel, shared):
            np.testing.assert_array_equal(
                serial.acceptability.b, other.acceptability.b
            )
            np.testing.assert_array_equal(serial.pairwise.c, other.pairwise.c)
            np.testing.assert_array_equal(serial.positions, other.positions)
            np.testing.assert_array_equal(serial.weights, other.weights)

    def test_seed_changes_draws(self) -> None:
        """Test that another seed gives other draws."""
        a = run_smaa(self.dm, SmaaConfig(samples=50, seed=1))
        b = run_smaa(self.dm, SmaaConfig(samples=50, seed=2))
        self.assertFalse(np.array_equal(a.weights, b.weights))

    def test_dominated_alternative_never_first(self) -> None:
        """Test that a dominated alternative has zero first-rank acceptability."""
        values = np.array(self.dm.values)
        values[5] = values[2] - 0.01
        result = run_smaa(self.dm.with_values(values), SmaaConfig(samples=500))
        self.assertEqual(result.acceptability.b[5, 0], 0.0)
        self.assertEqual(result.pairwise.c[5, 2], 0.0)

    def test_identical_alternatives_split_the_credit(self) -> None:
        """Test that exact ties give half a win to each side."""
        dm = DecisionMatrix(
            ("A", "B", "C"),
            ("x", "y"),
            np.array([[0.4, 0.6], [0.4, 0.6], [0.1, 0.2]]),
        )
        result = run_smaa(dm, SmaaConfig(samples=200))
        self.assertEqual(result.pairwise.c[0, 1], 0.5)
        self.assertEqual(result.acceptability.b[0, 0], 1.0)

    def test_fixed_weights(self) -> None:
        """Test that a point-mass sampler reproduces the deterministic ranking."""
        w = (0.1, 0.2, 0.3, 0.4)
        result = run_smaa(
            self.dm, SmaaConfig(samples=1, sampler="fixed", fixed_weights=w)
        )
        scores = weighted_sum_score(self.dm, WeightVector(np.array(w)))
        expected = ranking_from_scores(scores)
        self.assertEqual(result.sample_ranking(0), expected)
        b = result.acceptability.b
        self.assertTrue(np.all((b == 0.0) | (b == 1.0)))
        np.testing.assert_array_equal(b.sum(axis=0), np.ones(self.dm.m))
        np.testing.assert_array_equal(b.sum(axis=1), np.ones(self.dm.m))
        for i, position in enumerate(expected.position):
            self.assertEqual(b[i, position - 1], 1.0)

    def test_ordinal_draws(self) -> None:
        """Test that ordinal simulation keeps the preference order in every draw."""
        order = (2, 0, 3, 1)
        result = run_smaa(
            self.dm,
            SmaaConfig(samples=300, sampler="ordinal", preference_order=order),
        )
        self.assertTrue(np.all(np.diff(result.weights[:, list(order)], axis=1) <= 0))

    def test_ordinal_order_size(self) -> None:
        """Test that the preference order must cover every criterion."""
        cfg = SmaaConfig(samples=10, sampler="ordinal", preference_order=(1, 0))
        with self.assertRaises(DimensionMismatchError):
            run_smaa(self.dm, cfg)

    def test_central_weights(self) -> None:
        """Test central weights against the analytic means of each region."""
        result = run_smaa(self.pair, SmaaConfig(samples=10_000, seed=4))
        central_a, central_b = result.central.central_weights
        assert central_a is not None and central_b is not None
        self.assertAlmostEqual(central_a.w[0], 5.0 / 7.0, delta=0.01)
        self.assertAlmostEqual(central_b.w[0], 3.0 / 14.0, delta=0.01)
        self.assertEqual(result.central.confidence, (1.0, 1.0))

    def test_never_first_has_no_central_weight(self) -> None:
        """Test that an alternative never ranked first has no central weight."""
        values = np.array(self.dm.values)
        values[5] = values[2] - 0.01
        result = run_smaa(self.dm.with_values(values), SmaaConfig(samples=200))
        self.assertIsNone(result.central.central_weights[5])
        self.assertEqual(result.central.confidence[5], 0.0)


class TestChoquetSmaa(unittest.TestCase):
    """Test suite for simulation with a fixed interaction matrix."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = DecisionMatrix(
            ("A", "B", "C"),
            ("x", "y"),
            np.array([[1.0, 0.0], [0.0, 1.0], [0.5, 0.5]]),
        )
        self.interaction = np.array([[0.0, -0.2], [-0.2, 0.0]])
        self.cfg = SmaaConfig(samples=1000, aggregator="choquet")

    def test_needs_interactions(self) -> None:
        """Test that the Choquet aggregator cannot run without interactions."""
        with self.assertRaises(ConfigurationError):
            run_smaa(self.dm, self.cfg)

    def test_interaction_shape(self) -> None:
        """Test that the interaction matrix must match the criteria."""
        with self.assertRaises(DimensionMismatchError):
            run_smaa(self.dm, self.cfg, np.zeros((3, 3)))

    def test_light_draws_are_shrunk(self) -> None:
        """Test the count of draws whose smaller weight is below 0.1."""
        result = run_smaa(self.dm, self.cfg, self.interaction)
        expected = int(np.count_nonzero(result.weights.min(axis=1) < 0.1))
        self.assertEqual(result.shrunk_draws, expected)
        self.assertGreater(result.shrunk_draws, 100)
        self.assertLess(result.shrunk_draws, 300)

    def test_zero_interactions_match_weighted_sum(self) -> None:
        """Test that a zero interaction matrix gives weighted-sum indices."""
        choquet = run_smaa(self.dm, self.cfg, np.zeros((2, 2)))
        weighted = run_smaa(self.dm, SmaaConfig(samples=1000))
        np.testing.assert_array_equal(choquet.positions, weighted.positions)
        self.assertEqual(choquet.shrunk_draws, 0)


if __name__ == "__main__":
    unittest.main()
