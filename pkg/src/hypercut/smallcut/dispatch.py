"""
hypercut Small-Cut Dispatcher
=============================
Chooses between the local directed search (small connectivity) and the
kernel pipeline (large connectivity), with the ordering solver as the
fallback when neither finds a cut.
"""

import logging
from typing import Optional

import numpy as np

from hypercut.config import SolverConfig
from hypercut.core import Cut, Hypergraph, ceil_log2, component_cut
from hypercut.errors import BadParams, BadS, NoCutFound, TooSmall
from hypercut.ordering import slow_min_cut
from hypercut.smallcut.bipartite import big_lambda_small_cut
from hypercut.smallcut.directed import small_lambda_small_cut
from hypercut.sparsify import approximate_connectivity

logger = logging.getLogger(__name__)

BRANCHES = frozenset({"auto", "small", "large"})


def branch_threshold(G: Hypergraph, s: int) -> int:
    """2700 · s^r · ⌈log₂ n⌉."""
    return 2700 * s ** max(G.r, 2) * ceil_log2(G.n)


def small_size_min_cut(
    G: Hypergraph,
    s: int,
    rng: Optional[np.random.Generator] = None,
    branch: str = "auto",
    config: Optional[SolverConfig] = None,
) -> Cut:
    """
    Min cut for inputs with a min cut of at most s vertices.

    Args:
        branch: "auto" picks by connectivity; "small" and "large" force the
            local search or the kernel pipeline.
    """
    if s < 1:
        raise BadS(f"s must be at least 1, got {s}.")
    if branch not in BRANCHES:
        raise BadParams(f"Unknown branch '{branch}'. Valid: {sorted(BRANCHES)}")
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")

    k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, "small")

    if branch == "auto":
        branch = "small" if k <= branch_threshold(G, s) else "large"
    solver = small_lambda_small_cut if branch == "small" else big_lambda_small_cut
    try:
        return solver(G, s, rng=rng, config=config, k=k)
    except NoCutFound as e:
        logger.warning("%s branch found no cut (%s); falling back to slow_min_cut", branch, e)
        return slow_min_cut(G)
