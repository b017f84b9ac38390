"""
hypercut Oracle Module
======================
Exponential-time ground truth used by tests, ``verify`` and the structural
report. Every function refuses inputs beyond a configured size limit.
"""

import itertools
import logging
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Tuple

from hypercut.config import SolverConfig, resolve
from hypercut.core import Cut, Hypergraph, boundary_size
from hypercut.errors import BadS, InvalidSeparator, NoSplit, TooLarge, TooSmall

logger = logging.getLogger(__name__)

SOURCE = "oracle"


def _limit(limit: Optional[int], config: Optional[SolverConfig]) -> int:
    return resolve(config).oracle_limit if limit is None else limit


# --- Min cuts ---

def brute_min_cut(
    G: Hypergraph, limit: Optional[int] = None, config: Optional[SolverConfig] = None
) -> Tuple[int, List[FrozenSet[int]]]:
    """
    Exact λ and every min-cut side, each given as the side holding vertex 0.

    Walks the 2^(n-1) - 1 bipartitions in Gray-code order over vertices
    1..n-1, flipping one vertex per step and updating per-edge counts.

    Raises:
        TooSmall: If n < 2.
        TooLarge: If n exceeds the oracle limit.
    """
    limit = _limit(limit, config)
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")
    if G.n > limit:
        raise TooLarge(f"Oracle limit is n <= {limit}, got n={G.n}.")

    sizes = [len(e) for e in G.edges]
    inside = [0] * G.m
    in_side = [False] * G.n
    for eid in G.incidence[0]:
        inside[eid] += 1
    in_side[0] = True
    crossing = sum(1 for eid in range(G.m) if 0 < inside[eid] < sizes[eid])

    full = (1 << (G.n - 1)) - 1
    best = crossing
    sides: List[FrozenSet[int]] = [frozenset((0,))]
    gray = 0
    for step in range(1, full + 1):
        # Gray code flips the lowest set bit of the step counter.
        bit = (step & -step).bit_length() - 1
        gray ^= 1 << bit
        v = bit + 1
        delta = 1 if not in_side[v] else -1
        in_side[v] = not in_side[v]
        for eid in G.incidence[v]:
            before = 0 < inside[eid] < sizes[eid]
            inside[eid] += delta
            after = 0 < inside[eid] < sizes[eid]
            crossing += after - before
        if gray == full:
            continue
        if crossing < best:
            best = crossing
            sides = []
        if crossing == best:
            sides.append(frozenset(u for u in range(G.n) if in_side[u]))

    logger.debug("Oracle: n=%d m=%d lambda=%d with %d min cuts", G.n, G.m, best, len(sides))
    return best, sides


def brute_min_s_cut(
    G: Hypergraph,
    s: int,
    limit: Optional[int] = None,
    config: Optional[SolverConfig] = None,
) -> Cut:
    """
    Cheapest cut whose side has between 1 and s vertices.

    Sides are tried by increasing size, then lexicographically; the first
    minimum wins.

    Raises:
        BadS: If s < 1.
        TooLarge: If the candidate count exceeds 2^limit.
    """
    limit = _limit(limit, config)
    if s < 1:
        raise BadS(f"s must be at least 1, got {s}.")
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")
    top = min(s, G.n - 1)
    candidates = sum(comb(G.n, j) for j in range(1, top + 1))
    if candidates > (1 << limit):
        raise TooLarge(
            f"{candidates} candidate sides exceed the oracle budget 2^{limit}."
        )

    best: Optional[FrozenSet[int]] = None
    best_cap = G.m + 1
    for size in range(1, top + 1):
        for side in itertools.combinations(range(G.n), size):
            cap = boundary_size(G, side)
            if cap < best_cap:
                best, best_cap = frozenset(side), cap
    return Cut(side=best, capacity=best_cap, source=SOURCE)


def min_cut_union(
    G: Hypergraph,
    limit: Optional[int] = None,
    config: Optional[SolverConfig] = None,
    sides: Optional[Iterable[FrozenSet[int]]] = None,
) -> FrozenSet[int]:
    """
    Edge ids of hyperedges crossing at least one min cut.

    ``sides`` skips the enumeration when the min-cut sides are already known.
    """
    if sides is None:
        _, sides = brute_min_cut(G, limit=limit, config=config)
    union = set()
    for side in sides:
        for eid, e in enumerate(G.edges):
            k = sum(1 for v in e if v in side)
            if 0 < k < len(e):
                union.add(eid)
    return frozenset(union)


# --- Conductance ---

def brute_conductance(
    G: Hypergraph,
    X,
    limit: Optional[int] = None,
    config: Optional[SolverConfig] = None,
) -> Tuple[float, FrozenSet[int]]:
    """
    min over ∅ ≠ S ⊊ X of |E^o(S, X∖S)| / min(vol(S), vol(X∖S)).

    Volumes use full degrees in G. A split whose smaller volume is 0 counts
    as conductance 0. The witness always contains min(X).

    Raises:
        NoSplit: If |X| < 2.
        TooLarge: If |X| exceeds the oracle limit.
    """
    limit = _limit(limit, config)
    members = sorted(set(X))
    if len(members) < 2:
        raise NoSplit(f"Conductance needs at least 2 vertices, got {len(members)}.")
    if len(members) > limit:
        raise TooLarge(f"Oracle limit is |X| <= {limit}, got {len(members)}.")

    X_set = frozenset(members)
    touching = sorted({eid for v in members for eid in G.incidence[v]})
    local_edges = [frozenset(u for u in G.edges[eid] if u in X_set) for eid in touching]
    deg = {v: G.degree(v) for v in members}
    total_vol = sum(deg.values())

    first, rest = members[0], members[1:]
    best = float("inf")
    witness: FrozenSet[int] = frozenset((first,))
    for mask in range((1 << len(rest)) - 1):
        S = {first}
        S.update(rest[i] for i in range(len(rest)) if mask >> i & 1)
        vol_s = sum(deg[v] for v in S)
        denominator = min(vol_s, total_vol - vol_s)
        crossing = sum(1 for le in local_edges if (le & S) and (le - S))
        value = 0.0 if denominator == 0 else crossing / denominator
        if value < best:
            best, witness = value, frozenset(S)
    return best, witness


# --- Separators ---

def brute_min_separator(
    B,
    x: int,
    forbidden,
    limit: Optional[int] = None,
    config: Optional[SolverConfig] = None,
) -> Tuple[int, FrozenSet[int]]:
    """
    Minimum-weight S ⊆ U_E separating node ``x`` from every node in
    ``forbidden`` in the incidence graph B.

    Candidate separators are drawn from the hyperedge nodes by increasing
    size; N(x) always separates, so the search stops by size deg(x).

    Raises:
        InvalidSeparator: If ``forbidden`` meets N[x].
        TooLarge: If B has more hyperedge nodes than the oracle limit allows.
    """
    limit = _limit(limit, config)
    forbidden = frozenset(forbidden)
    closed = set(B.adj[x]) | {x}
    if forbidden & closed:
        raise InvalidSeparator(
            f"Forbidden nodes {sorted(forbidden & closed)} touch N[{x}]; no separator exists."
        )
    if B.m > 2 * limit:
        raise TooLarge(f"Oracle separator limit is m <= {2 * limit}, got m={B.m}.")

    edge_nodes = [B.n + i for i in range(B.m)]
    for size in range(0, len(B.adj[x]) + 1):
        for removed in itertools.combinations(edge_nodes, size):
            removed = frozenset(removed)
            if not _reaches(B, x, forbidden, removed):
                return size, removed
    raise RuntimeError("N(x) failed to separate x; incidence graph is inconsistent.")


def _reaches(B, x: int, targets: FrozenSet[int], removed: FrozenSet[int]) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in B.adj[u]:
            if w in removed or w in seen:
                continue
            if w in targets:
                return True
            seen.add(w)
            stack.append(w)
    return False
