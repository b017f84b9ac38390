"""
Test Suite for certificates and the connectivity estimate

Validates the certificate inequality exhaustively on small instances and the
λ < k <= 3λ contract against the oracle.
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

from hypercut.core import boundary_size, build
from hypercut.errors import BadK, TooSmall
from hypercut.generators import gen_complete_uniform, gen_random
from hypercut.oracle import brute_min_cut
from hypercut.sparsify import approximate_connectivity, certificate, certificate_edge_ids

from corpus import random_corpus


def _all_sides(n):
    for size in range(1, n):
        for rest in itertools.combinations(range(1, n), size - 1):
            yield (0,) + rest


def test_certificate_examples():
    """Test small certificates"""
    G = gen_random(8, 3, 12, seed=4)
    assert certificate(G, G.m) is G, "k >= m keeps everything"

    K4 = build(4, itertools.combinations(range(4), 2))
    assert certificate_edge_ids(K4, 1) == [0, 1, 2], "Star at 0 is the first spanning forest"
    sparse = certificate(K4, 1)
    assert sparse.m == 3 and all(boundary_size(sparse, side) >= 1 for side in _all_sides(4)), (
        "Every cut keeps an edge"
    )

    try:
        certificate(K4, 0)
        assert False, "Should reject k = 0"
    except BadK:
        pass
    print("✓ Certificate examples")


def test_certificate_inequality():
    """Test |δ_G'(C)| >= min(k, |δ_G(C)|) over all cuts"""
    violations = 0
    checked = 0
    for G in random_corpus(120, seed=5, max_n=9):
        sides = list(_all_sides(G.n))
        full = [boundary_size(G, side) for side in sides]
        for k in range(1, 7):
            sparse = certificate(G, k)
            assert sparse.m <= k * (G.n - 1), "At most k(n-1) hyperedges"
            assert set(sparse.edges) <= set(G.edges), "Subset of the input edges"
            for side, before in zip(sides, full):
                checked += 1
                if boundary_size(sparse, side) < min(k, before):
                    violations += 1
    assert checked > 0 and violations == 0, f"{violations} certificate violations"
    print("✓ Certificate inequality")


def test_certificate_idempotent():
    """Test certificate(certificate(G, k), k) == certificate(G, k)"""
    for seed in range(40):
        G = gen_random(10, 4, 30, seed=seed)
        for k in (1, 2, 3):
            once = certificate(G, k)
            assert certificate(once, k).edges == once.edges, f"Idempotent on seed {seed}, k={k}"
    print("✓ Certificate idempotent")


def test_approximate_connectivity():
    """Test λ < k <= 3λ"""
    assert approximate_connectivity(build(2, [[0, 1]])) == 2, "Single edge"
    assert approximate_connectivity(gen_complete_uniform(4, 3)) == 4, "λ = 3"
    assert approximate_connectivity(build(4, [[0, 1], [2, 3]])) == 0, "Disconnected"

    for G in random_corpus(500, seed=6):
        lam, _ = brute_min_cut(G)
        k = approximate_connectivity(G)
        if lam == 0:
            assert k == 0, "Disconnected sentinel"
        else:
            assert lam < k <= 3 * lam, f"Contract broken: λ={lam}, k={k}"

    try:
        approximate_connectivity(build(1, []))
        assert False, "Should reject n < 2"
    except TooSmall:
        pass
    print("✓ Approximate connectivity")


if __name__ == "__main__":
    print("\n🧪 Running Sparsify Tests\n")

    try:
        test_certificate_examples()
        test_certificate_inequality()
        test_certificate_idempotent()
        test_approximate_connectivity()

        print("\n✅ All tests passed!\n")
    except AssertionError as e:
        print(f"\n❌ Test failed: {e}\n")
        exit(1)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}\n")
        exit(1)
