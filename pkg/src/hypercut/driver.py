"""
hypercut Driver Module
======================
Composite min-cut algorithms, the label -> solver registry used by the CLI,
and the structural report measured with the oracle.

Composites:
- cx_min_cut: certificate at the connectivity estimate, then the ordering solver
- exp_decomp_min_cut: expander decomposition, trim and shave, contraction
- min_cut: small-connectivity shortcut, or the better of the small-side
  solver and the decomposition solver
"""

import logging
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from hypercut.config import SolverConfig, resolve
from hypercut.core import (
    Cut,
    Hypergraph,
    component_cut,
    contract,
    cut_capacity,
    lift_side,
    make_cut,
)
from hypercut.errors import BadParams, TooSmall
from hypercut.expander import hypergraph_expander_decomposition
from hypercut.oracle import brute_min_cut, min_cut_union
from hypercut.ordering import slow_min_cut
from hypercut.rng import derive_seed, draw_seed
from hypercut.smallcut import exhaustive_small_min_cut, small_size_min_cut
from hypercut.sparsify import approximate_connectivity, certificate
from hypercut.trimshave import shave_k, trim

logger = logging.getLogger(__name__)


def _require_cut(G: Hypergraph) -> None:
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")


def _child_rng(base: int, label: str) -> np.random.Generator:
    return np.random.default_rng(derive_seed(base, label))


# --- Composite solvers ---

def cx_min_cut(G: Hypergraph, k: Optional[int] = None) -> Cut:
    """Ordering solver on certificate(G, k) with λ < k <= 3λ, re-evaluated on G."""
    _require_cut(G)
    if k is None:
        k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, "cx")
    sparse = certificate(G, k)
    logger.debug("Certificate k=%d keeps %d of %d hyperedges", k, sparse.m, G.m)
    return make_cut(G, slow_min_cut(sparse).side, "cx")


def decomposition_phi(r: int, min_degree: int) -> float:
    """min((6r²/δ')^(1/(r-1)), 1/(r-1))."""
    r = max(r, 2)
    if min_degree <= 0:
        return 1 / (r - 1)
    return min((6 * r * r / min_degree) ** (1 / (r - 1)), 1 / (r - 1))


def exp_decomp_min_cut(
    G: Hypergraph,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SolverConfig] = None,
    k: Optional[int] = None,
) -> Cut:
    """
    Decompose the certificate, trim and shave the blocks 3r² times,
    contract what survives and solve the contraction with cx_min_cut.
    """
    _require_cut(G)
    if k is None:
        k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, "expdecomp")

    sparse = certificate(G, k)
    r = max(G.r, 2)
    phi = decomposition_phi(r, sparse.min_degree())
    decomposition = hypergraph_expander_decomposition(
        sparse, phi, seed=draw_seed(rng), config=config
    )
    parts = trim(sparse, decomposition.partition)
    parts = shave_k(sparse, parts, 3 * r * r)

    contracted, vmap = contract(sparse, parts)
    logger.debug(
        "phi=%.4f, %d blocks, contraction n=%d -> %d",
        phi, len(decomposition.partition), G.n, contracted.n,
    )
    if contracted.n < 2:
        logger.warning("Contraction collapsed every vertex; solving G directly")
        return make_cut(G, cx_min_cut(G, k=k).side, "expdecomp")

    inner = cx_min_cut(contracted)
    return make_cut(G, lift_side(inner.side, vmap), "expdecomp")


def large_branch_threshold(r: int) -> int:
    """3r(4r²)^r: at or below it min_cut returns cx_min_cut directly."""
    r = max(r, 2)
    return 3 * r * (4 * r * r) ** r


def small_side_bound(n: int, r: int, k: int) -> int:
    """⌊r - log₂(k/12r)/log₂ n⌋ clamped to [1, ⌊n/2⌋]."""
    r = max(r, 2)
    value = r - math.log2(k / (12 * r)) / math.log2(n)
    return max(1, min(math.floor(value), n // 2))


def min_cut(
    G: Hypergraph,
    rng: Optional[np.random.Generator] = None,
    force_large: bool = False,
    config: Optional[SolverConfig] = None,
) -> Cut:
    """
    Top-level min cut.

    Args:
        force_large: Skip the small-connectivity shortcut so the full
            pipeline runs at any connectivity.
    """
    _require_cut(G)
    k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, "auto")

    r = max(G.r, 2)
    if k <= large_branch_threshold(r) and not force_large:
        return cx_min_cut(G, k=k)

    sparse = certificate(G, k)
    s = small_side_bound(G.n, r, k)
    base = draw_seed(rng)
    logger.debug("Large-connectivity pipeline: k=%d, s=%d", k, s)
    small = small_size_min_cut(sparse, s, rng=_child_rng(base, "small"), config=config)
    decomposed = exp_decomp_min_cut(
        sparse, rng=_child_rng(base, "expdecomp"), config=config, k=k
    )
    small_cap = cut_capacity(G, small.side)
    decomposed_cap = cut_capacity(G, decomposed.side)
    if decomposed_cap < small_cap:
        return Cut(side=decomposed.side, capacity=decomposed_cap, source=decomposed.source)
    return Cut(side=small.side, capacity=small_cap, source=small.source)


# --- Registry ---

Solver = Callable[[Hypergraph, int, dict, SolverConfig], Tuple[Cut, Dict[str, object]]]


def _run_auto(G, seed, params, config):
    force = bool(params.get("force_large", False))
    cut = min_cut(G, rng=_child_rng(seed, "auto"), force_large=force, config=config)
    return cut, {"force_large": force}


def _run_slow(G, seed, params, config):
    return slow_min_cut(G), {}


def _run_cx(G, seed, params, config):
    return cx_min_cut(G), {}


def _run_expdecomp(G, seed, params, config):
    cut = exp_decomp_min_cut(G, rng=_child_rng(seed, "expdecomp"), config=config)
    return cut, {"repetitions": config.repetitions}


def _run_small(G, seed, params, config):
    s = params.get("s")
    if s is None:
        s = 1
    branch = params.get("branch") or "auto"
    cut = small_size_min_cut(G, s, rng=_child_rng(seed, "small"), branch=branch, config=config)
    return cut, {"s": s, "branch": branch, "repetitions": config.repetitions}


def _run_exhaustive(G, seed, params, config):
    s = params.get("s")
    if s is None:
        s = min(max(G.n // 2, 1), config.exhaustive_limit)
    return exhaustive_small_min_cut(G, s, config=config), {"s": s}


_ALGORITHMS: Dict[str, Solver] = {
    "auto": _run_auto,
    "slow": _run_slow,
    "cx": _run_cx,
    "expdecomp": _run_expdecomp,
    "small": _run_small,
    "exhaustive": _run_exhaustive,
}

ALGORITHM_LABELS = tuple(_ALGORITHMS)
SEEDED = frozenset({"auto", "expdecomp", "small"})


def run_algorithm(
    label: str,
    G: Hypergraph,
    seed: int = 0,
    params: Optional[dict] = None,
    config: Optional[SolverConfig] = None,
) -> Tuple[Cut, Dict[str, object]]:
    """
    Run the solver registered under ``label``.

    Returns:
        (cut, flat parameter map for the result record)

    Raises:
        BadParams: For an unknown label.
    """
    solver = _ALGORITHMS.get(label)
    if solver is None:
        raise BadParams(f"Unknown algorithm '{label}'. Valid: {list(ALGORITHM_LABELS)}")
    cut, used = solver(G, seed, dict(params or {}), resolve(config))
    logger.info("%s: capacity %d, side of %d vertices", label, cut.capacity, len(cut.side))
    return cut, used


# --- Structural report ---

def structural_report(
    G: Hypergraph, limit: Optional[int] = None, config: Optional[SolverConfig] = None
) -> dict:
    """
    Measure min-cut structure with the oracle: connectivity, min-cut sizes,
    the hyperedges in the union of all min cuts, and the size gap that holds
    once λ >= r·2^(r+1).
    """
    lam, sides = brute_min_cut(G, limit=limit, config=config)
    n, m = G.n, G.m
    r = max(G.r, 2)
    sizes = sorted(min(len(side), n - len(side)) for side in sides)

    union = min_cut_union(G, sides=sides)

    threshold = None
    union_shape = None
    if lam > 0:
        threshold = r - math.log2(lam / (4 * r)) / math.log2(n)
        union_shape = m * lam ** (-1 / (r - 1))

    gap_hypothesis = lam >= r * 2 ** (r + 1)
    gap_upper = (lam / 2) ** (1 / r)
    gap_holds = None
    if gap_hypothesis:
        gap_holds = not any(threshold < size < gap_upper for size in sizes)

    return {
        "n": n,
        "m": m,
        "r": r,
        "lambda": lam,
        "min_cut_count": len(sides),
        "min_cut_sizes": sizes,
        "size_threshold": threshold,
        "conclusion1_met": threshold is not None and any(size <= threshold for size in sizes),
        "union_size": len(union),
        "union_ratio": len(union) / m if m else 0.0,
        "union_shape": union_shape,
        "union_vs_shape": len(union) / union_shape if union_shape else None,
        "gap_hypothesis": gap_hypothesis,
        "gap_interval": [threshold, gap_upper] if gap_hypothesis else None,
        "gap_holds": gap_holds,
    }
