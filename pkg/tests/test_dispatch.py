"""
Test Suite for the small-cut dispatcher

Validates branch selection, forced branches on planted instances, and the
ordering-solver fallback when a randomized branch finds nothing.
"""

import os
import sys
from unittest import mock

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.config import SolverConfig
from hypercut.core import build
from hypercut.errors import BadParams, BadS, NoCutFound, TooSmall
from hypercut.generators import gen_planted_small_cut
from hypercut.oracle import brute_min_cut
from hypercut.ordering import slow_min_cut
from hypercut.smallcut.dispatch import branch_threshold, small_size_min_cut

from corpus import random_corpus


def test_threshold():
    """Test 2700·s^r·⌈log₂ n⌉"""
    G = build(8, [[0, 1, 2], [3, 4]])
    assert branch_threshold(G, 1) == 2700 * 3, "s = 1"
    assert branch_threshold(G, 2) == 2700 * 8 * 3, "s = 2, r = 3"
    print("✓ Threshold")


def test_planted_all_branches():
    """Test every branch recovers planted single-vertex cuts"""
    for seed in range(10):
        G, side = gen_planted_small_cut(10, 3, 1, 2, seed=seed)
        for branch in ("auto", "small", "large"):
            cut = small_size_min_cut(G, 1, rng=np.random.default_rng(seed), branch=branch)
            assert cut.capacity == 2, f"seed {seed}, {branch}: got {cut.capacity}"
    print("✓ Planted, all branches")


def test_planted_pair():
    """Test a planted two-vertex side through the auto branch"""
    G, side = gen_planted_small_cut(10, 3, 2, 3, seed=4)
    cut = small_size_min_cut(G, 2, rng=np.random.default_rng(0))
    assert cut.capacity == 3, "Planted capacity"
    print("✓ Planted pair")


def test_search_success_on_planted():
    """Test the local search recovers planted cuts in at least 95% of seeded runs"""
    config = SolverConfig(repetitions=1, search_floor=0)
    runs = 20
    with mock.patch("hypercut.smallcut.directed.slow_min_cut", wraps=slow_min_cut) as base, \
            mock.patch("hypercut.smallcut.dispatch.slow_min_cut", wraps=slow_min_cut) as fallback, \
            mock.patch("hypercut.smallcut.dispatch.big_lambda_small_cut") as large:
        for index in range(50):
            r, lam = 2 + index % 2, 1 + (index // 2) % 2
            G, side = gen_planted_small_cut(16, r, 1, lam, seed=index)
            hits = sum(
                small_size_min_cut(G, 1, rng=np.random.default_rng(run), config=config).capacity == lam
                for run in range(runs)
            )
            assert hits >= 0.95 * runs, f"Instance {index}: {hits}/{runs} runs found λ = {lam}"
    assert base.call_count == 0, "Every run went through the local search"
    assert fallback.call_count == 0, "No run fell back to slow_min_cut"
    assert large.call_count == 0, "Small connectivity stays on the local search"
    print("✓ Search success on planted instances")


def test_matches_oracle_when_side_is_small():
    """Test capacity equals λ whenever some min cut has a side of at most s"""
    for index, G in enumerate(random_corpus(80, seed=41, max_n=9)):
        lam, sides = brute_min_cut(G)
        s = min(min(len(C), G.n - len(C)) for C in sides)
        cut = small_size_min_cut(G, s, rng=np.random.default_rng(index))
        assert cut.capacity == lam, f"Instance {index}: {cut.capacity} != {lam}"
    print("✓ Matches oracle")


def test_disconnected():
    """Test zero connectivity short-circuits"""
    cut = small_size_min_cut(build(4, [[0, 1], [2, 3]]), 1, branch="large")
    assert cut.capacity == 0, "Component cut"
    print("✓ Disconnected")


def test_fallback():
    """Test NoCutFound falls back to slow_min_cut"""
    G, _ = gen_planted_small_cut(10, 3, 1, 2, seed=1)
    with mock.patch("hypercut.smallcut.dispatch.big_lambda_small_cut", side_effect=NoCutFound("none")):
        cut = small_size_min_cut(G, 1, branch="large")
    assert cut.capacity == slow_min_cut(G).capacity, "Ordering solver result"
    print("✓ Fallback")


def test_errors():
    """Test parameter errors"""
    G = build(3, [[0, 1, 2]])
    cases = [
        (lambda: small_size_min_cut(G, 0), BadS),
        (lambda: small_size_min_cut(G, 1, branch="medium"), BadParams),
        (lambda: small_size_min_cut(build(1, []), 1), TooSmall),
    ]
    for call, error in cases:
        try:
            call()
            assert False, f"Should raise {error.__name__}"
        except error:
            pass
    print("✓ Errors")


if __name__ == "__main__":
    print("\n🧪 Running Dispatcher Tests\n")

    try:
        test_threshold()
        test_planted_all_branches()
        test_planted_pair()
        test_search_success_on_planted()
        test_matches_oracle_when_side_is_small()
        test_disconnected()
        test_fallback()
        test_errors()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
