"""
Test Suite for the maximum-adjacency ordering solver

Validates pendant capacities and exact agreement with the oracle.
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.core import build, contract, cut_capacity
from hypercut.errors import TooSmall
from hypercut.generators import gen_complete_uniform, gen_random
from hypercut.oracle import brute_min_cut
from hypercut.ordering import ma_ordering, slow_min_cut

from corpus import random_corpus


def test_ma_ordering_examples():
    """Test orderings on small instances"""
    order, pendant = ma_ordering(build(2, [[0, 1]]))
    assert order == [0, 1] and pendant == 1, "Single edge"

    order, pendant = ma_ordering(build(4, itertools.combinations(range(4), 2)))
    assert order[0] == 0 and sorted(order) == [0, 1, 2, 3], "Starts at 0, visits all"
    assert pendant == 3, "K4 pendant capacity"

    _, pendant = ma_ordering(gen_complete_uniform(4, 3))
    assert pendant == 3, "Complete 3-uniform pendant capacity"

    try:
        ma_ordering(build(1, []))
        assert False, "Should reject n < 2"
    except TooSmall:
        pass
    print("✓ MA ordering examples")


def test_pendant_capacity_is_last_singleton_cut():
    """Test d(v_n) equals |δ({v_n})|"""
    for G in random_corpus(40, seed=1):
        order, pendant = ma_ordering(G)
        assert pendant == cut_capacity(G, {order[-1]}), f"Pendant capacity on {G!r}"
    print("✓ Pendant capacity")


def test_slow_min_cut_examples():
    """Test small exact answers"""
    cut = slow_min_cut(build(3, [[0, 1], [1, 2]]))
    assert cut.capacity == 1 and cut.source == "slow", "Path"

    cut = slow_min_cut(gen_complete_uniform(4, 3))
    assert cut.capacity == 3 and cut.size(4) == 1, "Singleton side"

    cut = slow_min_cut(build(5, [[0, 1], [2, 3, 4]]))
    assert cut.capacity == 0 and cut.side == frozenset({0, 1}), "Component cut"
    print("✓ Slow min cut examples")


def test_slow_min_cut_matches_oracle():
    """Test oracle equivalence on 500 random instances"""
    mismatches = 0
    for G in random_corpus(500, seed=2):
        lam, _ = brute_min_cut(G)
        cut = slow_min_cut(G)
        if cut.capacity != lam or cut_capacity(G, cut.side) != cut.capacity:
            mismatches += 1
    assert mismatches == 0, f"{mismatches} mismatches against the oracle"
    print("✓ Slow min cut matches oracle")


def test_slow_min_cut_on_multigraph():
    """Test contracted inputs with parallel hyperedges"""
    for seed in range(30):
        G = gen_random(10, 4, 25, seed=seed)
        H, _ = contract(G, [{0, 1, 2}, {7, 8}])
        if H.n < 2:
            continue
        assert slow_min_cut(H).capacity == brute_min_cut(H)[0], f"Multigraph on seed {seed}"
    print("✓ Slow min cut on multigraphs")


if __name__ == "__main__":
    print("\n🧪 Running Ordering Tests\n")

    try:
        test_ma_ordering_examples()
        test_pendant_capacity_is_last_singleton_cut()
        test_slow_min_cut_examples()
        test_slow_min_cut_matches_oracle()
        test_slow_min_cut_on_multigraph()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
