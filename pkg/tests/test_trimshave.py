"""
Test Suite for Trim and Shave

Validates the helper pass, hand-traced trim and shave outcomes, the trim
fixed point, and the four unconditional edge-loss and boundary bounds on
random (G, X) pairs.
"""

import itertools
import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.core import VertexPartition, build, components
from hypercut.errors import OverlappingBlocks
from hypercut.generators import gen_complete_uniform, gen_random
from hypercut.oracle import brute_min_cut
from hypercut.trimshave import (
    block_summary,
    check_intersection_claims,
    check_trim_shave_claims,
    shave,
    shave_k,
    trim,
    trim_shave_helper,
)

from corpus import random_corpus

K4 = list(itertools.combinations(range(4), 2))


def test_helper():
    """Test degree and internal-degree bookkeeping"""
    state = trim_shave_helper(build(2, [[0, 1]]), [[0, 1]])
    assert state.d[0] == 1 and state.d_X[0] == 1, "Single edge inside V"

    G = build(3, [[0, 1, 2], [0, 2]])
    assert trim_shave_helper(G, VertexPartition.singletons(3)).d_X == (0, 0, 0), "Singletons hold nothing"

    G = build(4, [[0, 1, 2], [0, 3]])
    state = trim_shave_helper(G, [[0, 1, 2]])
    assert state.part == (1, 1, 1, 0), "Block ids are 1-based, 0 outside"
    assert state.d_X[0] == 1 and state.d[0] == 2, "d_X(0)=1, d(0)=2"
    assert state.delta_X[0] == (0,), "δ_X(0) = {e0}"

    try:
        trim_shave_helper(G, [[0, 1], [1, 2]])
        assert False, "Should reject overlapping blocks"
    except OverlappingBlocks:
        pass
    print("✓ Helper")


def test_trim_examples():
    """Test hand-traced trim outcomes"""
    G = build(6, [[0, 1, 2], [2, 3], [4, 5]])
    parts = [c for c in components(G)]
    assert set(trim(G, parts).blocks) == set(VertexPartition.of(parts).blocks), "Components stay"

    G = build(4, K4)
    assert trim(G, [[0, 3]]).blocks == (frozenset({0, 3}),), "One internal edge is enough"

    G = build(4, [e for e in K4 if e != (0, 1)])
    assert len(trim(G, [[0, 1]])) == 0, "Block with no internal edge vanishes"
    print("✓ Trim examples")


def test_trim_fixed_point():
    """Test no survivor violates the trim threshold"""
    rng = np.random.default_rng(4)
    for G in random_corpus(300, seed=4, max_n=14, max_m=50):
        vertices = list(range(G.n))
        rng.shuffle(vertices)
        cut = int(rng.integers(0, G.n + 1))
        parts = [vertices[:cut], vertices[cut:]]
        result = trim(G, parts)
        state = trim_shave_helper(G, result)
        r = max(G.r, 2)
        for v in result.covered():
            assert 2 * r * state.d_X[v] >= state.d[v], f"Vertex {v} should have been trimmed"
        before = VertexPartition.of(parts).blocks
        for block in result.blocks:
            assert any(block <= b for b in before), "Trim only removes vertices"
    print("✓ Trim fixed point")


def test_blocks_are_independent():
    """Test trimming and shaving two blocks equals doing each alone"""
    rng = np.random.default_rng(8)
    for G in random_corpus(200, seed=8, max_n=12, min_n=4):
        vertices = list(range(G.n))
        rng.shuffle(vertices)
        A, B = frozenset(vertices[: G.n // 2]), frozenset(vertices[G.n // 2:])
        for op in (trim, shave):
            together = op(G, [A, B]).covered()
            alone = op(G, [A]).covered() | op(G, [B]).covered()
            assert together == alone, f"{op.__name__} mixes blocks"
    print("✓ Blocks are independent")


def test_shave_examples():
    """Test hand-traced shave outcomes"""
    G = build(6, [[0, 1, 2], [2, 3], [4, 5]])
    parts = components(G)
    assert set(shave(G, parts).blocks) == set(VertexPartition.of(parts).blocks), "Components stay"

    assert len(shave(build(4, K4), [[0, 1, 2]])) == 0, "K4 triple: 2 <= 2.25, all shaved"
    assert len(shave(gen_complete_uniform(5, 3), [[0, 1, 2, 3]])) == 0, "3 <= (8/9)·6, all shaved"
    print("✓ Shave examples")


def test_shave_k():
    """Test shave_k composes shave"""
    G = gen_random(12, 3, 30, seed=2)
    parts = [list(range(6)), list(range(6, 12))]
    assert shave_k(G, parts, 0) == VertexPartition.of(parts), "k=0 is the identity"
    assert shave_k(G, parts, 2) == shave(G, shave(G, parts)), "k=2 is shave∘shave"
    print("✓ Shave k")


def test_unconditional_bounds():
    """Test the four trim/shave bounds on 1000 random (G, X) pairs"""
    rng = np.random.default_rng(37)
    failures = []
    for index, G in enumerate(random_corpus(1000, seed=37, max_n=12, max_r=5, max_m=45)):
        X = {v for v in range(G.n) if rng.random() < 0.6}
        report = check_trim_shave_claims(G, X)
        if not report.all_hold:
            failures.append((index, sorted(X)))
    assert not failures, f"Bounds violated on {failures[:5]}"
    print("✓ Unconditional bounds")


def test_bounds_on_component_and_star():
    """Test the bounds with zero-loss components and a star-heavy hypergraph"""
    G = build(7, [[0, 1, 2], [1, 2], [3, 4, 5, 6], [3, 4]])
    report = check_trim_shave_claims(G, {0, 1, 2})
    assert report.lost_by_trim == 0 and report.lost_by_shave == 0, "Component loses nothing"
    assert report.all_hold, "Component bounds hold"

    star = build(10, [[0, v] for v in range(1, 10)] + [[0, v, v + 1] for v in range(1, 9)])
    for X in ({0}, {0, 1, 2}, set(range(5)), set(range(1, 10))):
        assert check_trim_shave_claims(star, X).all_hold, f"Star bounds hold for {sorted(X)}"
    print("✓ Component and star bounds")


def test_intersection_checks():
    """Test conclusions are only evaluated under their hypotheses"""
    G = gen_random(9, 3, 24, seed=11)
    lam, sides = brute_min_cut(G)
    checks = check_intersection_claims(G, range(G.n), sides, lam)
    assert len(checks) == len(sides), "One check per min cut"
    for check in checks:
        assert (check.trim_holds is None) == (not check.trim_hypothesis), "Trim conclusion gated"
        assert not check.shave_hypothesis and check.shave_holds is None, "λ is far below r(4r²)^r"
    print("✓ Intersection checks")


def test_trim_bound_uses_min_degree():
    """Test the trim overlap bound on K25, where δ = 24 and |δ(V)| = 0"""
    G = build(25, itertools.combinations(range(25), 2))
    single, pair = check_intersection_claims(G, range(25), [{0}, {0, 1}], 24)
    assert single.trim_bound == 1.0, f"(24 / 24)^1 = 1, got {single.trim_bound}"
    assert single.trim_hypothesis and single.trim_holds, "Overlap 1 is within the bound"
    assert not pair.trim_hypothesis and pair.trim_holds is None, "Overlap 2 exceeds the bound"

    G = build(4, itertools.combinations(range(4), 2))
    check = check_intersection_claims(G, {0, 1}, [{0}], 3)[0]
    assert check.trim_bound == 0.125, "K4: (3 / 24)^1, independent of |δ(X)| = 4"
    print("✓ Trim bound from minimum degree")


def test_block_summary():
    """Test summary counts"""
    G = build(6, [[0, 1, 2], [2, 3], [4, 5]])
    summary = block_summary(G, VertexPartition.of([[0, 1, 2], [4, 5]]))
    assert summary == {"blocks": 2, "covered": 5, "boundary_sum": 1}, "Only {2,3} crosses"
    print("✓ Block summary")


if __name__ == "__main__":
    print("\n🧪 Running Trim/Shave Tests\n")

    try:
        test_helper()
        test_trim_examples()
        test_trim_fixed_point()
        test_blocks_are_independent()
        test_shave_examples()
        test_shave_k()
        test_unconditional_bounds()
        test_bounds_on_component_and_star()
        test_intersection_checks()
        test_trim_bound_uses_min_degree()
        test_block_summary()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
