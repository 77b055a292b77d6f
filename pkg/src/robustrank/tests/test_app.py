import json
import os
import tempfile
import unittest
from pathlib import Path
from typing import Any
from unittest import mock

from robustrank import app
from robustrank.exceptions import NonConvergenceError

MATRIX_CSV = (
    "country,x,y,z\n"
    "A,0.9,0.2,0.4\n"
    "B,0.1,0.8,0.6\n"
    "C,0.5,0.5,0.5\n"
    "D,0.3,0.9,0.1\n"
    "E,0.7,0.1,0.9\n"
)


class TestMain(unittest.TestCase):
    """Test suite for the command-line entry point and its exit codes."""

    def setUp(self) -> None:
        """Set up the test case."""
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        self.data = self.dir / "matrix.csv"
        self.data.write_text(MATRIX_CSV, encoding="utf-8")
        self.config = self.dir / "run.json"
        self.config.write_text(
            json.dumps({"weights": [0.5, 0.3, 0.2], "preference_order": [1, 2, 3]}),
            encoding="utf-8",
        )
        self.env = mock.patch.dict(os.environ, {}, clear=True)
        self.env.start()

    def tearDown(self) -> None:
        self.env.stop()
        self.tmp.cleanup()

    def main(self, *argv: Any) -> int:
        common = ["--data", str(self.data), "--config", str(self.config)]
        return app.main([str(a) for a in argv] + common)

    def test_ingest_check_prints(self) -> None:
        """Test a successful command that prints its report."""
        with mock.patch("builtins.print") as printed:
            self.assertEqual(self.main("ingest-check"), 0)
        self.assertTrue(printed.called)

    def test_score_writes_ranking(self) -> None:
        """Test that --output writes the ranking file."""
        out = self.dir / "out"
        self.assertEqual(self.main("score", "--agg", "ci-u2", "--output", out), 0)
        lines = (out / "ranking_ci_u2.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "position,alternative,score")
        self.assertEqual(len(lines), 6)

    def test_reproduce(self) -> None:
        """Test a small end-to-end Condorcet reproduction."""
        out = self.dir / "reports"
        code = self.main(
            "reproduce", "--samples", 64, "--weights", "ordinal", "--output", out
        )
        self.assertEqual(code, 0)
        for name in (
            "ranking_ws.csv",
            "fit_u1.json",
            "ordinal_tau_table.csv",
            "ordinal_ranking_ci_u1_cond.csv",
            "ordinal_tau_ws_cond.json",
        ):
            with self.subTest(file=name):
                self.assertTrue((out / name).is_file())

    def test_compare(self) -> None:
        """Test comparing an emitted ranking with a plain ranking file."""
        out = self.dir / "out"
        self.assertEqual(self.main("score", "--output", out), 0)
        plain = self.dir / "reverse.csv"
        labels = [
            line.split(",")[1]
            for line in (out / "ranking_ws.csv").read_text().splitlines()[1:]
        ]
        plain.write_text("\n".join(reversed(labels)) + "\n", encoding="utf-8")
        compared = self.dir / "compared"
        code = self.main("compare", out / "ranking_ws.csv", plain, "--output", compared)
        self.assertEqual(code, 0)
        table = (compared / "tau_table.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(table[0], "ranking,ranking_ws,reverse")
        self.assertEqual(table[1], "ranking_ws,0,1")

    def test_perturb(self) -> None:
        """Test re-ranking with two weights exchanged."""
        out = self.dir / "out"
        code = self.main(
            "perturb", "--set", "x=0.3", "--set", "y=0.5", "--output", out
        )
        self.assertEqual(code, 0)
        document = json.loads((out / "perturbation.json").read_text(encoding="utf-8"))
        self.assertEqual(document["weights"], {"x": 0.3, "y": 0.5, "z": 0.2})

    def test_usage_error(self) -> None:
        """Test that bad arguments exit with code 1."""
        self.assertEqual(app.main(["score", "--agg", "owa"]), 1)
        self.assertEqual(app.main([]), 1)
        self.assertEqual(self.main("perturb", "--set", "x"), 1)

    def test_missing_data_directory(self) -> None:
        """Test that a command without input data exits with code 1."""
        self.assertEqual(app.main(["correlate"]), 1)

    def test_data_error(self) -> None:
        """Test that invalid input data exits with code 2."""
        self.data.write_text("country,x,y,z\nA,1,2,3\nB,1,x,3\n", encoding="utf-8")
        self.assertEqual(self.main("correlate"), 2)
        missing = str(self.dir / "no.csv")
        self.assertEqual(app.main(["correlate", "--data", missing]), 2)

    def test_numerical_error(self) -> None:
        """Test that numerical failures exit with code 3."""

        def fail(*_: Any) -> None:
            raise NonConvergenceError(500)

        with mock.patch.dict(app.COMMANDS, {"learn": fail}):
            self.assertEqual(self.main("learn"), 3)

    def test_unexpected_error(self) -> None:
        """Test that an unexpected exception also exits with code 3."""

        def fail(*_: Any) -> None:
            raise RuntimeError("boom")

        with mock.patch.dict(app.COMMANDS, {"learn": fail}):
            self.assertEqual(self.main("learn"), 3)


if __name__ == "__main__":
    unittest.main()
