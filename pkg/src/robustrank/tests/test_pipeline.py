import unittest
from dataclasses import replace
from functools import lru_cache

import numpy as np

from robustrank.aggregation.strategies import weighted_sum_score
from robustrank.config import DEFAULT_PREFERENCE_ORDER
from robustrank.core.models import (
    AcceptabilityMatrix,
    DecisionMatrix,
    Ranking,
    RunSpec,
    SmaaConfig,
    WeightVector,
)
from robustrank.core.validation import ranking_from_scores
from robustrank.exceptions import ConfigurationError, DataError, DimensionMismatchError
from robustrank.pipeline.methodologies import (
    Methodology1Result,
    Methodology2Result,
    Methodology3Result,
    family_of,
    learn_interactions,
    reorder_acceptability,
    run,
    run_methodology_1,
    run_methodology_2,
    run_methodology_3,
    tau_cross_table,
    weight_perturbation,
)
from robustrank.tests.fixtures import (
    load_dataset,
    published_weights,
    random_matrix,
    requires_dataset,
)


def uncorrelated_matrix() -> DecisionMatrix:
    """Two criteria with a Pearson correlation of exactly zero."""
    values = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    return DecisionMatrix(("A", "B", "C", "D"), ("x", "y"), values)


class TestMethodology1(unittest.TestCase):
    """Test suite for deterministic-weight rankings."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = random_matrix(np.random.default_rng(8), 15, 4)
        self.w = WeightVector(np.array([0.4, 0.3, 0.2, 0.1]))

    def test_rankings_and_distances(self) -> None:
        """Test that all three rankings are built and compared with the weighted sum."""
        result = run_methodology_1(self.dm, self.w)
        self.assertEqual(set(result.rankings), {"WS", "CI_u2", "CI_u1"})
        self.assertEqual(set(result.tau), {("WS", "CI_u2"), ("WS", "CI_u1")})
        for value in result.tau.values():
            self.assertTrue(0.0 <= value <= 1.0)
        expected = ranking_from_scores(weighted_sum_score(self.dm, self.w))
        self.assertEqual(result.rankings["WS"], expected)

    def test_reuses_learned_interactions(self) -> None:
        """Test that previously learned fits are used as given."""
        learned = learn_interactions(self.dm, self.w)
        result = run_methodology_1(self.dm, self.w, learned=learned)
        self.assertIs(result.learned, learned)

    def test_uncorrelated_data(self) -> None:
        """Test that uncorrelated criteria give three identical rankings."""
        dm = uncorrelated_matrix()
        result = run_methodology_1(dm, WeightVector(np.array([0.6, 0.4])))
        self.assertEqual(result.rankings["WS"], result.rankings["CI_u2"])
        self.assertEqual(result.rankings["WS"], result.rankings["CI_u1"])
        self.assertEqual(set(result.tau.values()), {0.0})

    def test_dimension_mismatch(self) -> None:
        """Test that the weights must cover every criterion."""
        with self.assertRaises(DimensionMismatchError):
            run_methodology_1(self.dm, WeightVector(np.array([0.5, 0.5])))


class TestMethodology2And3(unittest.TestCase):
    """Test suite for the sampled-weight and Condorcet methodologies."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = random_matrix(np.random.default_rng(21), 10, 4)
        self.w = WeightVector(np.array([0.4, 0.3, 0.2, 0.1]))
        self.cfg = SmaaConfig(samples=300, seed=5)

    def test_one_simulation_per_family(self) -> None:
        """Test that every requested family is simulated with the same draws."""
        result = run_methodology_2(self.dm, self.cfg, self.w)
        self.assertEqual(set(result.smaa), {"ws", "ci_u1", "ci_u2"})
        np.testing.assert_array_equal(
            result.smaa["ws"].weights, result.smaa["ci_u2"].weights
        )
        self.assertIsInstance(result.acceptability("ws"), AcceptabilityMatrix)

    def test_unknown_family(self) -> None:
        """Test that an unknown aggregator family is rejected."""
        with self.assertRaises(ConfigurationError):
            run_methodology_2(self.dm, self.cfg, self.w, ("ws", "owa"))

    def test_condorcet_rankings_and_tau(self) -> None:
        """Test the tau cross-table and per-draw distributions."""
        result = run_methodology_3(self.dm, self.cfg, self.w)
        names = ("WS", "CI_u1", "CI_u2", "WS-Cond", "CI_u1-Cond", "CI_u2-Cond")
        self.assertEqual(result.tau_table.names, names)
        values = result.tau_table.values
        np.testing.assert_array_equal(values, values.T)
        np.testing.assert_array_equal(np.diag(values), np.zeros(6))
        self.assertEqual(set(result.tau_distributions), set(names))
        for distribution in result.tau_distributions.values():
            self.assertEqual(distribution.values.size, 300)
            self.assertTrue(np.all(distribution.values >= 0.0))
            self.assertTrue(np.all(distribution.values <= 1.0))
        self.assertEqual(result.tau_distributions["CI_u2-Cond"].family, "ci_u2")

    def test_reuses_simulation(self) -> None:
        """Test that a finished simulation is not run again."""
        simulation = run_methodology_2(self.dm, self.cfg, self.w, ("ws",))
        result = run_methodology_3(
            self.dm, self.cfg, self.w, ("ws",), simulation=simulation
        )
        self.assertIs(result.simulation, simulation)
        self.assertEqual(result.tau_table.names, ("WS", "WS-Cond"))

    def test_deterministic_by_seed(self) -> None:
        """Test that a repeated run yields the same Condorcet rankings."""
        first = run_methodology_3(self.dm, self.cfg, self.w, ("ws",))
        second = run_methodology_3(self.dm, self.cfg, self.w, ("ws",))
        self.assertEqual(first.rankings, second.rankings)

    def test_uncorrelated_condorcet_rankings_agree(self) -> None:
        """Test that uncorrelated criteria give one Condorcet ranking for all."""
        dm = uncorrelated_matrix()
        result = run_methodology_3(
            dm, SmaaConfig(samples=200), WeightVector(np.array([0.6, 0.4]))
        )
        self.assertEqual(result.rankings["WS-Cond"], result.rankings["CI_u2-Cond"])
        self.assertEqual(result.rankings["WS-Cond"], result.rankings["CI_u1-Cond"])

    def test_dominance_chain(self) -> None:
        """Test that a chain of dominating alternatives is never reordered."""
        values = np.array(
            [[4.0, 3.0, 4.0], [3.0, 2.0, 1.0], [2.0, 1.5, 0.8], [1.0, 0.0, 0.5]]
        )
        dm = DecisionMatrix(("A", "B", "C", "D"), ("x", "y", "z"), values)
        w = WeightVector(np.array([0.5, 0.3, 0.2]))
        result = run_methodology_3(dm, SmaaConfig(samples=200, seed=3), w)
        for family in ("ws", "ci_u1", "ci_u2"):
            with self.subTest(family=family):
                b = result.simulation.acceptability(family).b
                np.testing.assert_array_equal(b, np.eye(4))
        for name, ranking in result.rankings.items():
            with self.subTest(ranking=name):
                self.assertEqual(ranking.order, (0, 1, 2, 3))


class TestRun(unittest.TestCase):
    """Test suite for executing run specifications."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = random_matrix(np.random.default_rng(34), 8, 3)
        self.w = WeightVector(np.array([0.5, 0.3, 0.2]))
        self.smaa = SmaaConfig(samples=100)

    def test_dispatch(self) -> None:
        """Test that each methodology returns its own result type."""
        self.assertIsInstance(
            run(self.dm, RunSpec("M1", weights=self.w)), Methodology1Result
        )
        spec = RunSpec("M2", weight_mode="uniform", weights=self.w, smaa=self.smaa)
        self.assertIsInstance(run(self.dm, spec), Methodology2Result)
        spec = RunSpec(
            "M3",
            weight_mode="ordinal",
            weights=self.w,
            smaa=replace(self.smaa, sampler="ordinal", preference_order=(0, 1, 2)),
            comparisons=(("WS", "WS-Cond"),),
        )
        result = run(self.dm, spec)
        assert isinstance(result, Methodology3Result)
        self.assertEqual(result.simulation.config.sampler, "ordinal")

    def test_missing_weights(self) -> None:
        """Test that a run needs reference weights."""
        spec = RunSpec("M2", weight_mode="uniform", smaa=self.smaa)
        with self.assertRaises(ConfigurationError):
            run(self.dm, spec)

    def test_unknown_comparison(self) -> None:
        """Test that comparisons must name computed rankings."""
        spec = RunSpec(
            "M3",
            weight_mode="uniform",
            weights=self.w,
            smaa=self.smaa,
            families=("ws",),
            comparisons=(("WS", "CI_u1-Cond"),),
        )
        with self.assertRaises(ConfigurationError):
            run(self.dm, spec)


class TestTauAndReordering(unittest.TestCase):
    """Test suite for ranking comparisons and acceptability reordering."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.rankings = {
            "a": Ranking.from_order([0, 1, 2]),
            "b": Ranking.from_order([1, 0, 2]),
            "c": Ranking.from_order([2, 1, 0]),
        }

    def test_tau_cross_table(self) -> None:
        """Test the distances between three named rankings."""
        table = tau_cross_table(self.rankings)
        self.assertEqual(table.names, ("a", "b", "c"))
        self.assertAlmostEqual(table.distance("a", "b"), 1.0 / 3.0)
        self.assertAlmostEqual(table.distance("a", "c"), 1.0)
        self.assertAlmostEqual(table.distance("c", "b"), 2.0 / 3.0)

    def test_reorder_acceptability(self) -> None:
        """Test that acceptability rows follow a ranking."""
        b = AcceptabilityMatrix(
            np.array([[0.2, 0.3, 0.5], [0.5, 0.5, 0.0], [0.3, 0.2, 0.5]])
        )
        reordered = reorder_acceptability(b, self.rankings["c"])
        np.testing.assert_array_equal(reordered.b, b.b[[2, 1, 0]])
        with self.assertRaises(DimensionMismatchError):
            reorder_acceptability(b, Ranking.from_order([0, 1]))

    def test_family_of(self) -> None:
        """Test the family behind a ranking name."""
        self.assertEqual(family_of("WS"), "ws")
        self.assertEqual(family_of("CI_u1-Cond"), "ci_u1")
        with self.assertRaises(ConfigurationError):
            family_of("GAII")


class TestWeightPerturbation(unittest.TestCase):
    """Test suite for re-ranking under changed weights."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = DecisionMatrix(
            ("A", "B", "C"),
            ("x", "y", "z"),
            np.array([[1.0, 0.0, 0.5], [0.0, 1.0, 0.5], [0.3, 0.3, 0.3]]),
        )
        self.w = WeightVector(np.array([0.5, 0.3, 0.2]))

    def test_swap(self) -> None:
        """Test that exchanging two weights exchanges the two leaders."""
        result = weight_perturbation(self.dm, self.w, {"x": 0.3, 1: 0.5})
        self.assertEqual(result.base.order, (0, 1, 2))
        self.assertEqual(result.ranking.order, (1, 0, 2))
        self.assertEqual(result.moved, ((0, 1, 2), (1, 2, 1)))
        self.assertAlmostEqual(result.tau, 1.0 / 3.0)

    def test_no_change(self) -> None:
        """Test that unchanged weights move nobody."""
        result = weight_perturbation(self.dm, self.w, {})
        self.assertEqual(result.moved, ())
        self.assertEqual(result.tau, 0.0)

    def test_off_simplex(self) -> None:
        """Test that perturbed weights must still sum to one."""
        with self.assertRaises(ConfigurationError):
            weight_perturbation(self.dm, self.w, {"x": 0.9})

    def test_unknown_criterion(self) -> None:
        """Test that criteria are looked up by name or index."""
        with self.assertRaises(DataError):
            weight_perturbation(self.dm, self.w, {"q": 0.5})
        with self.assertRaises(ConfigurationError):
            weight_perturbation(self.dm, self.w, {7: 0.5})


# --- Country dataset ---------------------------------------------------------

SAMPLES = 10_000


@lru_cache(maxsize=None)
def country_condorcet(mode: str) -> Methodology3Result:
    dm = load_dataset()
    if mode == "ordinal":
        cfg = SmaaConfig(
            samples=SAMPLES,
            sampler="ordinal",
            preference_order=DEFAULT_PREFERENCE_ORDER,
        )
    else:
        cfg = SmaaConfig(samples=SAMPLES)
    return run_methodology_3(dm, cfg, published_weights())


@requires_dataset
class TestCountryRankings(unittest.TestCase):
    """Reproduction of the published country rankings."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.dm = load_dataset()
        self.w = published_weights()

    def top(self, ranking: Ranking, k: int) -> tuple[str, ...]:
        return ranking.labels(self.dm.alternatives)[:k]

    def test_index_top_ten(self) -> None:
        """Test the top ten of the weighted-sum index."""
        ranking = ranking_from_scores(weighted_sum_score(self.dm, self.w))
        expected = (
            "USA", "China", "Singapore", "UK", "Canada",
            "South Korea", "Israel", "Germany", "Switzerland", "Finland",
        )  # fmt: skip
        self.assertEqual(self.top(ranking, 10), expected)

    def test_choquet_distances(self) -> None:
        """Test the tau distances of both Choquet rankings to the index."""
        result = run_methodology_1(self.dm, self.w)
        self.assertAlmostEqual(result.tau[("WS", "CI_u2")], 0.2125, delta=0.01)
        self.assertAlmostEqual(result.tau[("WS", "CI_u1")], 0.2866, delta=0.01)
        self.assertEqual(
            self.top(result.rankings["CI_u2"], 6),
            ("USA", "China", "Singapore", "UK", "South Korea", "Canada"),
        )

    def test_uniform_condorcet(self) -> None:
        """Test the weight-free top ten of every family under uniform weights."""
        result = country_condorcet("uniform")
        expected = (
            "USA", "China", "Singapore", "South Korea", "Germany",
            "Canada", "UK", "Finland", "Japan", "Netherlands",
        )  # fmt: skip
        swapped = expected[:2] + (expected[3], expected[2]) + expected[4:]
        for name, top_ten in (
            ("WS-Cond", expected),
            ("CI_u2-Cond", expected),
            ("CI_u1-Cond", swapped),
        ):
            with self.subTest(ranking=name):
                self.assertEqual(self.top(result.rankings[name], 10), top_ten)
        usa = self.dm.alternative_index("USA")
        self.assertGreater(result.simulation.acceptability("ws").b[usa, 0], 0.9)

    def test_uniform_tau_medians(self) -> None:
        """Test that the Condorcet ranking sits closer to the draws than the index."""
        distributions = country_condorcet("uniform").tau_distributions
        self.assertAlmostEqual(
            distributions["WS-Cond"].summary["median"], 0.1, delta=0.05
        )
        self.assertAlmostEqual(distributions["WS"].summary["median"], 0.25, delta=0.05)

    def test_ordinal_condorcet(self) -> None:
        """Test that ordinal weights keep the top four in every approach."""
        result = country_condorcet("ordinal")
        for name in ("WS-Cond", "CI_u2-Cond", "CI_u1-Cond"):
            with self.subTest(ranking=name):
                self.assertEqual(
                    self.top(result.rankings[name], 4),
                    ("USA", "China", "Singapore", "UK"),
                )

    def test_perturbation(self) -> None:
        """Test that moving 0.01 from w2 to w1 exchanges Canada and South Korea."""
        result = weight_perturbation(self.dm, self.w, {0: 0.12, 1: 0.05})
        moved = {self.dm.alternatives[i] for i, _, _ in result.moved}
        self.assertLessEqual({"Canada", "South Korea"}, moved)


if __name__ == "__main__":
    unittest.main()
