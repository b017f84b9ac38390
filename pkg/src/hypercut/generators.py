"""
hypercut Generators Module
==========================
Instance generators: seeded random hypergraphs, planted small-side cuts,
complete uniform hypergraphs, and the two adversarial constructions whose
min cuts are known in closed form.

Vertex numbering of the adversarial constructions:
- nontrivial example: u_i = 2i, v_i = 2i+1 for i < n/2, then a, b, c = n, n+1, n+2
- tight example: block Q_u = {u·q, ..., u·q + q - 1} with q = √n
"""

import itertools
import logging
import math
from math import comb
from typing import FrozenSet, List, Set, Tuple

from hypercut.config import SolverConfig, resolve
from hypercut.core import Edge, Hypergraph, build
from hypercut.errors import BadParams, Infeasible, NotSquare, OddN
from hypercut.oracle import brute_min_cut
from hypercut.ordering import slow_min_cut
from hypercut.rng import make_rng

logger = logging.getLogger(__name__)

# Smallest n for which the nontrivial example's min-cut sides are guaranteed.
NONTRIVIAL_MIN_N = 100

GENERATORS = frozenset({"random", "planted", "appendixB", "appendixC", "complete"})


def _check_rank(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise BadParams(f"Rank must be an integer >= 2, got {r!r}.")


# --- Random ---

def gen_random(n: int, r: int, m: int, seed: int = 0) -> Hypergraph:
    """
    m distinct hyperedges with sizes uniform in [2, r] and members drawn
    uniformly without replacement. Sizes whose hyperedges are all taken are
    skipped.

    Raises:
        Infeasible: If m exceeds the number of distinct hyperedges of size 2..r.
    """
    _check_rank(r)
    if n < 0 or m < 0:
        raise BadParams(f"n and m must be non-negative, got n={n}, m={m}.")
    top = min(r, n)
    available = {size: comb(n, size) for size in range(2, top + 1)}
    if m > sum(available.values()):
        raise Infeasible(
            f"Only {sum(available.values())} distinct hyperedges of size 2..{r} exist on {n} vertices, asked for {m}."
        )

    rng = make_rng(seed, "random", n, r, m)
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    used = {size: 0 for size in available}
    while len(edges) < m:
        open_sizes = [size for size in available if used[size] < available[size]]
        size = open_sizes[int(rng.integers(0, len(open_sizes)))]
        edge = tuple(sorted(int(v) for v in rng.choice(n, size=size, replace=False)))
        if edge in seen:
            continue
        seen.add(edge)
        used[size] += 1
        edges.append(edge)
    return build(n, edges)


# --- Planted ---

def _crossing_edges(
    n: int, r: int, s: int, lam: int, rng
) -> List[Edge]:
    inner = list(range(s))
    outer = list(range(s, n))
    max_attempts = 200 * lam + 1000
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    attempts = 0
    while len(edges) < lam:
        attempts += 1
        if attempts > max_attempts:
            raise Infeasible(f"Could not place {lam} distinct crossing hyperedges with s={s}, r={r}.")
        if s + 1 <= r:
            # Crossing edges hold the whole side so splitting it costs extra.
            chosen_inner = inner
        else:
            k = int(rng.integers(1, r))
            chosen_inner = [int(v) for v in rng.choice(inner, size=k, replace=False)]
        room = min(r - len(chosen_inner), len(outer))
        k_out = int(rng.integers(1, room + 1))
        chosen_outer = [int(v) for v in rng.choice(outer, size=k_out, replace=False)]
        edge = tuple(sorted(chosen_inner + chosen_outer))
        if edge in seen:
            continue
        seen.add(edge)
        edges.append(edge)
    return edges


def _internal_capacity(side: List[int], r: int) -> int:
    return sum(comb(len(side), size) for size in range(2, min(r, len(side)) + 1))


def gen_planted_small_cut(
    n: int,
    r: int,
    s: int,
    lam: int,
    seed: int = 0,
    config: SolverConfig = None,
) -> Tuple[Hypergraph, FrozenSet[int]]:
    """
    Plant a cut of capacity ``lam`` around the side {0, ..., s-1}.

    Each side starts as a complete graph and gains random internal
    hyperedges until the min cut of the whole instance equals ``lam``.

    Returns:
        (hypergraph, planted side)

    Raises:
        Infeasible: If no densification of the sides pushes every other cut
            above ``lam``.
    """
    _check_rank(r)
    if s < 1 or 2 * s >= n:
        raise BadParams(f"Planted side needs 1 <= s < n/2, got s={s}, n={n}.")
    if lam < 1:
        raise BadParams(f"Planted capacity must be >= 1, got {lam}.")

    config = resolve(config)
    rng = make_rng(seed, "planted", n, r, s, lam)
    side = frozenset(range(s))
    sides = [list(range(s)), list(range(s, n))]

    edges = _crossing_edges(n, r, s, lam, rng)
    seen: Set[Edge] = set(edges)
    for part in sides:
        for pair in itertools.combinations(part, 2):
            seen.add(pair)
            edges.append(pair)

    capacity = [_internal_capacity(part, r) for part in sides]
    placed = [comb(len(part), 2) for part in sides]
    batch = max(1, n // 2)
    while True:
        G = build(n, edges)
        if slow_min_cut(G).capacity == lam:
            break
        if all(placed[i] >= capacity[i] for i in range(2)):
            raise Infeasible(
                f"Both sides are complete up to rank {r} and the min cut is still below {lam}."
            )
        for i, part in enumerate(sides):
            added = 0
            while added < batch and placed[i] < capacity[i]:
                size = int(rng.integers(3, min(r, len(part)) + 1)) if min(r, len(part)) >= 3 else 2
                edge = tuple(sorted(int(v) for v in rng.choice(part, size=size, replace=False)))
                if edge in seen:
                    continue
                seen.add(edge)
                edges.append(edge)
                placed[i] += 1
                added += 1
        logger.debug("Planted instance densified to m=%d", len(edges))

    if n <= config.oracle_limit:
        lam_oracle, _ = brute_min_cut(G, config=config)
        if lam_oracle != lam:
            raise RuntimeError(f"Oracle connectivity {lam_oracle} disagrees with planted {lam}.")
    return G, side


# --- Adversarial constructions ---

def gen_nontrivial_example(n: int) -> Hypergraph:
    """
    Rank-5 instance on n+3 vertices where every min cut has a side of at
    least two vertices: the pair edges {u_i, v_i}, then for every i < j and
    x in (a, b, c) the hyperedge {u_i, v_i, u_j, v_j, x}.

    Raises:
        OddN: If n is odd or below 2.
    """
    if not isinstance(n, int) or n < 2 or n % 2:
        raise OddN(f"n must be an even integer >= 2, got {n!r}.")
    if n < NONTRIVIAL_MIN_N:
        logger.warning(
            "n=%d is below %d; the two-vertex min cut is not guaranteed", n, NONTRIVIAL_MIN_N
        )
    half = n // 2
    apex = (n, n + 1, n + 2)
    edges: List[Edge] = [(2 * i, 2 * i + 1) for i in range(half)]
    for i, j in itertools.combinations(range(half), 2):
        for x in apex:
            edges.append((2 * i, 2 * i + 1, 2 * j, 2 * j + 1, x))
    return build(n + 3, edges)


def appendix_b_pair(n: int, i: int) -> FrozenSet[int]:
    """The side {u_i, v_i} of the nontrivial example (0-based i)."""
    if n % 2 or not 0 <= i < n // 2:
        raise BadParams(f"Pair index {i} is outside [0, {n // 2}) for n={n}.")
    return frozenset((2 * i, 2 * i + 1))


def _square_side(n: int) -> int:
    q = math.isqrt(n) if isinstance(n, int) and n >= 0 else -1
    if q < 0 or q * q != n:
        raise NotSquare(f"n must be a perfect square, got {n!r}.")
    return q


def gen_tight_example(n: int, r: int) -> Hypergraph:
    """
    Rank-r instance whose min-cut sides are the √n blocks Q_u.

    A complete r-uniform hypergraph on q = √n super-vertices is expanded:
    super-vertex u becomes Q_u, the slots of u's hyperedges are dealt to the
    members of Q_u round-robin, and each Q_u is completed internally.

    Raises:
        NotSquare: If n is not a perfect square.
        BadParams: If √n < r + 1.
    """
    _check_rank(r)
    q = _square_side(n)
    if q < r + 1:
        raise BadParams(f"√n = {q} must be at least r+1 = {r + 1}.")

    dealt = [0] * q
    edges: List[Edge] = []
    for superedge in itertools.combinations(range(q), r):
        members = []
        for u in superedge:
            members.append(u * q + dealt[u] % q)
            dealt[u] += 1
        edges.append(tuple(members))
    for u in range(q):
        edges.extend(itertools.combinations(range(u * q, u * q + q), r))

    per_block = comb(q - 1, r - 1)
    if per_block % q:
        logger.debug("Uneven deal: %d incidences over %d members per block", per_block, q)
    return build(n, edges)


def appendix_c_blocks(n: int) -> List[FrozenSet[int]]:
    q = _square_side(n)
    return [frozenset(range(u * q, u * q + q)) for u in range(q)]


def gen_complete_uniform(n: int, r: int) -> Hypergraph:
    """All C(n, r) hyperedges of size r."""
    _check_rank(r)
    if n < r:
        raise BadParams(f"Complete r-uniform needs n >= r, got n={n}, r={r}.")
    return build(n, itertools.combinations(range(n), r))
