"""
Test Suite for oracle cross-checking

Validates verify reports on random instances and repro files.
"""

import os
import sys
import tempfile

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.config import SolverConfig
from hypercut.core import build
from hypercut.errors import BadParams, TooLarge
from hypercut.generators import gen_random
from hypercut.graph_loader import load_hgr
from hypercut.verify import verify_instance, write_repro

from corpus import random_corpus

ROW_NAMES = ["slow", "cx", "expdecomp", "auto", "auto-forced", "small", "exhaustive"]


def test_report_shape():
    """Test report keys and row order"""
    G = gen_random(8, 3, 20, seed=4)
    report = verify_instance(G, seed=3)
    assert set(report) == {"n", "m", "lambda", "seed", "rows", "ok"}, "Report keys"
    assert [row["solver"] for row in report["rows"]] == ROW_NAMES, "Row order"
    assert report["ok"], f"Mismatch: {report['rows']}"
    assert verify_instance(G, seed=3) == report, "Same seed, same report"
    print("✓ Report shape")


def test_random_corpus_verifies():
    """Test every solver agrees with the oracle on a small corpus"""
    for index, G in enumerate(random_corpus(40, seed=61, max_n=9)):
        report = verify_instance(G, seed=index, config=SolverConfig(threads=2))
        bad = [row for row in report["rows"] if not row["ok"]]
        assert not bad, f"Instance {index}: {bad}"
    print("✓ Random corpus verifies")


def test_disconnected():
    """Test λ = 0 is verified"""
    report = verify_instance(build(4, [[0, 1], [2, 3]]))
    assert report["lambda"] == 0 and report["ok"], "Component cuts"
    print("✓ Disconnected")


def test_too_large():
    """Test the oracle limit"""
    try:
        verify_instance(gen_random(12, 2, 20), config=SolverConfig(oracle_limit=10))
        assert False, "Should reject n above the oracle limit"
    except TooLarge:
        pass
    print("✓ Too large")


def test_write_repro():
    """Test repro files load back"""
    G = gen_random(7, 3, 15, seed=2)
    with tempfile.TemporaryDirectory() as tmp:
        path = write_repro(G, os.path.join(tmp, "repro"), "case_7.seed-2")
        assert path.endswith("case_7.seed-2.hgr"), "Label names the file"
        assert load_hgr(path) == G, "Round trip"
        try:
            write_repro(G, tmp, "../escape")
            assert False, "Should reject path-like labels"
        except BadParams:
            pass
    print("✓ Write repro")


if __name__ == "__main__":
    print("\n🧪 Running Verify Tests\n")

    try:
        test_report_shape()
        test_random_corpus_verifies()
        test_disconnected()
        test_too_large()
        test_write_repro()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
