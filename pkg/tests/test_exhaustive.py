"""
Test Suite for the exhaustive small-side solver

Validates subset counting, the inclusion-exclusion boundary on a hand
trace, and agreement with the brute-force bounded-side oracle.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.config import SolverConfig
from hypercut.core import build
from hypercut.errors import BadS
from hypercut.oracle import brute_min_s_cut
from hypercut.smallcut.exhaustive import exhaustive_small_min_cut, subset_counts

from corpus import random_corpus

TRACE = build(3, [[0, 1, 2], [0, 1], [1, 2]])


def test_subset_counts():
    """Test g and g' on the hand-traced instance"""
    g, g_exact = subset_counts(TRACE, 2)
    assert g[(1,)] == 3, "Vertex 1 is in all three edges"
    assert g[(0, 1)] == 2 and g_exact[(0, 1)] == 1, "{0,1} is in two edges, equal to one"
    assert (0, 2) not in g_exact and g.get((3,), 0) == 0, "Absent keys mean zero"
    try:
        subset_counts(TRACE, 0)
        assert False, "Should reject s = 0"
    except BadS:
        pass
    print("✓ Subset counts")


def test_trace():
    """Test the boundary of {0, 1} is 2 and s=1 picks a min-degree vertex"""
    cut = exhaustive_small_min_cut(TRACE, 2)
    assert cut.capacity == 2, "Best side has boundary 2"
    cut = exhaustive_small_min_cut(TRACE, 1)
    assert cut.side == frozenset({0}) and cut.capacity == 2, "d(0) = 2 is the smallest degree"
    assert cut.source == "exhaustive", "Source label"
    print("✓ Trace")


def test_matches_oracle():
    """Test agreement with brute_min_s_cut on 300 instances, s <= 3"""
    for index, G in enumerate(random_corpus(300, seed=31, max_n=10)):
        s = 1 + index % 3
        got = exhaustive_small_min_cut(G, s)
        want = brute_min_s_cut(G, s)
        assert got.capacity == want.capacity, f"Instance {index}: {got.capacity} != {want.capacity}"
        assert got.side == want.side, "Same tie-breaking as the oracle"
    print("✓ Matches oracle")


def test_s_above_rank():
    """Test s larger than every hyperedge"""
    for G in random_corpus(60, seed=32, max_n=9, max_r=2):
        assert exhaustive_small_min_cut(G, 4).capacity == brute_min_s_cut(G, 4).capacity, "s > r"
    print("✓ s above rank")


def test_limits():
    """Test the configured range of s"""
    for s in (0, 5):
        try:
            exhaustive_small_min_cut(TRACE, s)
            assert False, f"Should reject s = {s}"
        except BadS:
            pass
    cut = exhaustive_small_min_cut(TRACE, 5, config=SolverConfig(exhaustive_limit=5))
    assert cut.capacity == 2, "Raised limit accepts s = 5"
    print("✓ Limits")


if __name__ == "__main__":
    print("\n🧪 Running Exhaustive Tests\n")

    try:
        test_subset_counts()
        test_trace()
        test_matches_oracle()
        test_s_above_rank()
        test_limits()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
