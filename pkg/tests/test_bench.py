"""
Test Suite for benchmark suites

Validates suite rows on small ladders, the log-log slope fit and CSV output.
"""

import os
import sys
import tempfile

import pandas as pd

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.bench import RANDOM_SOLVERS, SUITE_NAMES, run_suite, scaling_slope, write_csv
from hypercut.config import SolverConfig
from hypercut.errors import BadParams

CONFIG = SolverConfig(threads=2)


def test_random_suite():
    """Test rows per instance and oracle agreement"""
    df = run_suite("random", seed=1, config=CONFIG, count=4, quiet=True)
    assert len(df) == 4 * len(RANDOM_SOLVERS), "One row per (instance, solver)"
    assert (df["suite"] == "random").all(), "Suite column"
    assert df["ok"].all(), f"Disagreements:\n{df[~df['ok']]}"
    assert (df["ms"] >= 0).all(), "Timings recorded"
    again = run_suite("random", seed=1, config=CONFIG, count=4, quiet=True)
    assert df["capacity"].tolist() == again["capacity"].tolist(), "Deterministic capacities"
    print("✓ Random suite")


def test_scaling_suites():
    """Test the ordering and trim/shave ladders"""
    df = run_suite("ordering", config=CONFIG, sizes=[20, 40], quiet=True)
    assert df["n"].tolist() == [20, 40] and (df["solver"] == "slow").all(), "Ordering rows"

    df = run_suite("trimshave", config=CONFIG, sizes=[200, 400], quiet=True)
    assert df["instance"].tolist() == [200, 400], "Trim/shave rows"
    assert (df["p"] > 0).all(), "Sizes recorded"
    print("✓ Scaling suites")


def test_scaling_slope():
    """Test the log-log fit"""
    df = pd.DataFrame({"n": [10, 20, 40, 80], "ms": [1.0, 4.0, 16.0, 64.0]})
    assert abs(scaling_slope(df, "n", "ms") - 2.0) < 1e-9, "Quadratic data has slope 2"
    df = pd.DataFrame({"n": [10, 20], "ms": [0.0, 3.0]})
    try:
        scaling_slope(df, "n", "ms")
        assert False, "Should need two positive points"
    except BadParams:
        pass
    print("✓ Scaling slope")


def test_unknown_suite():
    """Test suite names"""
    assert set(SUITE_NAMES) == {"random", "ordering", "trimshave", "appendix"}, "Suite names"
    try:
        run_suite("everything")
        assert False, "Should reject unknown suite"
    except BadParams:
        pass
    print("✓ Unknown suite")


def test_write_csv():
    """Test CSV text and files"""
    df = pd.DataFrame({"suite": ["random"], "n": [5], "ms": [1.5]})
    text = write_csv(df)
    assert text.splitlines()[0] == "suite,n,ms", "Header row"
    with tempfile.TemporaryDirectory() as tmp:
        path = write_csv(df, os.path.join(tmp, "out.csv"))
        assert pd.read_csv(path)["n"].tolist() == [5], "File round trip"
    print("✓ Write CSV")


if __name__ == "__main__":
    print("\n🧪 Running Bench Tests\n")

    try:
        test_random_suite()
        test_scaling_suites()
        test_scaling_slope()
        test_unknown_suite()
        test_write_csv()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
