"""
hypercut Exhaustive Small Cut
=============================
Deterministic min cut over all sides of at most s vertices, computed by
inclusion–exclusion on subset counts instead of scanning the edges once
per candidate side.
"""

import itertools
import logging
from typing import Dict, Optional, Tuple

from hypercut.config import SolverConfig, resolve
from hypercut.core import Cut, Hypergraph, cut_capacity
from hypercut.errors import BadS, TooSmall

logger = logging.getLogger(__name__)

SOURCE = "exhaustive"

Subset = Tuple[int, ...]


def subset_counts(G: Hypergraph, s: int) -> Tuple[Dict[Subset, int], Dict[Subset, int]]:
    """
    For every vertex set S with 1 <= |S| <= s:
    g[S] counts hyperedges containing S, g_exact[S] counts hyperedges equal
    to S. Absent keys mean 0.
    """
    if s < 1:
        raise BadS(f"s must be at least 1, got {s}.")
    g: Dict[Subset, int] = {}
    g_exact: Dict[Subset, int] = {}
    for e in G.edges:
        for size in range(1, min(s, len(e)) + 1):
            for sub in itertools.combinations(e, size):
                g[sub] = g.get(sub, 0) + 1
        if len(e) <= s:
            g_exact[e] = g_exact.get(e, 0) + 1
    return g, g_exact


def _boundary_from_counts(S: Subset, g: Dict[Subset, int], g_exact: Dict[Subset, int]) -> int:
    """
    |δ(S)| as the sum over non-empty S' ⊆ S of the hyperedges e with
    e ∩ S = S' and e ≠ S'.
    """
    total = 0
    k = len(S)
    for size in range(1, k + 1):
        for sub in itertools.combinations(S, size):
            rest = [v for v in S if v not in sub]
            exact = 0
            for extra in range(0, k - size + 1):
                sign = -1 if extra % 2 else 1
                for add in itertools.combinations(rest, extra):
                    exact += sign * g.get(tuple(sorted(sub + add)), 0)
            total += exact - g_exact.get(sub, 0)
    return total


def exhaustive_small_min_cut(
    G: Hypergraph, s: int, config: Optional[SolverConfig] = None
) -> Cut:
    """
    Cheapest cut among all sides S with 1 <= |S| <= s and S ≠ V.

    Raises:
        BadS: If s < 1 or s exceeds the configured exhaustive limit.
    """
    limit = resolve(config).exhaustive_limit
    if s < 1 or s > limit:
        raise BadS(f"s must lie in [1, {limit}], got {s}.")
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")

    g, g_exact = subset_counts(G, s)
    best: Optional[Subset] = None
    best_value = G.m + 1
    for size in range(1, min(s, G.n - 1) + 1):
        for S in itertools.combinations(range(G.n), size):
            value = _boundary_from_counts(S, g, g_exact)
            if value < best_value:
                best, best_value = S, value

    capacity = cut_capacity(G, best)
    if capacity != best_value:
        raise RuntimeError(
            f"Counted boundary {best_value} of {list(best)} disagrees with capacity {capacity}."
        )
    logger.debug("Exhaustive search up to size %d: capacity %d", s, best_value)
    return Cut(side=frozenset(best), capacity=capacity, source=SOURCE)
