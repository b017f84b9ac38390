"""
Example Usage: hypercut

Demonstrates the library end to end: generating instances, solving them
with each algorithm, and checking the answers against the oracle.
"""

import json
import os
import sys

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../src"))

import numpy as np

from hypercut import cut_capacity, min_cut, run_algorithm, slow_min_cut, structural_report
from hypercut.expander import hypergraph_expander_decomposition
from hypercut.generators import (
    appendix_b_pair,
    gen_nontrivial_example,
    gen_planted_small_cut,
    gen_random,
    gen_tight_example,
)
from hypercut.result_writer import ResultRecord, write_result
from hypercut.verify import verify_instance


print("=" * 60)
print("EXAMPLE 1: Every Solver on One Random Hypergraph")
print("=" * 60)

G = gen_random(10, 4, 30, seed=1)
print(f"n={G.n} m={G.m} r={G.r} p={G.p}")
for label in ("slow", "cx", "expdecomp", "small", "exhaustive", "auto"):
    cut, params = run_algorithm(label, G, seed=1)
    print(f"  {label:<10} lambda={cut.capacity} side={cut.sorted_side()} params={params}")

print("\n" + "=" * 60)
print("EXAMPLE 2: Planted Small Cut")
print("=" * 60)

G, side = gen_planted_small_cut(12, 3, 2, 3, seed=5)
cut = min_cut(G, rng=np.random.default_rng(5), force_large=True)
print(f"planted side {sorted(side)} has capacity {cut_capacity(G, side)}")
print(write_result(ResultRecord.from_cut(cut, G.n, seed=5)))

print("=" * 60)
print("EXAMPLE 3: Adversarial Constructions")
print("=" * 60)

G = gen_nontrivial_example(100)
print(f"pair example: n={G.n} m={G.m}, cut({{u_0, v_0}}) = {cut_capacity(G, appendix_b_pair(100, 0))}")
G = gen_tight_example(64, 3)
print(f"block example: n={G.n} m={G.m}, lambda = {slow_min_cut(G).capacity}")

print("\n" + "=" * 60)
print("EXAMPLE 4: Expander Decomposition")
print("=" * 60)

G = gen_random(14, 3, 50, seed=9)
decomposition = hypergraph_expander_decomposition(G, 0.25, seed=9)
print(json.dumps(decomposition.to_dict(), indent=2))

print("\n" + "=" * 60)
print("EXAMPLE 5: Oracle Cross-Check and Structure Report")
print("=" * 60)

G = gen_random(9, 3, 24, seed=3)
report = verify_instance(G, seed=3)
print(f"lambda={report['lambda']} ok={report['ok']}")
for row in report["rows"]:
    print(f"  {row['solver']:<12} {row['capacity']} (expected {row['expected']})")
print(json.dumps(structural_report(G), indent=2))
