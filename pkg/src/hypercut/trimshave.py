"""
hypercut Trim/Shave Module
==========================
Trim and Shave on a family of disjoint vertex blocks.

- Trim repeatedly drops v from its block X while d_X(v) < d(v) / 2r.
- Shave keeps v in X only if d_X(v) > (1 - 1/r²) d(v), judged against the
  block as it was before the shave.

Removed vertices become implicit singletons. Both run in O(pr).
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from hypercut.core import Hypergraph, VertexPartition, boundary_size, edge_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HelperState:
    """Per-vertex block membership and degree data for one partition."""

    part: Tuple[int, ...]
    d: Tuple[int, ...]
    d_X: Tuple[int, ...]
    delta_X: Tuple[Tuple[int, ...], ...]


def _rank(G: Hypergraph) -> int:
    return max(G.r, 2)


def trim_shave_helper(G: Hypergraph, parts) -> HelperState:
    """
    One pass over the hyperedges.

    Returns:
        part[v]: 1-based block id of v, or 0 when v is in no block.
        d[v]: degree of v.
        d_X[v]: hyperedges at v lying inside v's block.
        delta_X[v]: ids of those hyperedges.

    Raises:
        OverlappingBlocks: If two blocks share a vertex.
    """
    partition = VertexPartition.of(parts, n=G.n)
    part = [0] * G.n
    for i, block in enumerate(partition.blocks, start=1):
        for v in block:
            part[v] = i

    internal: List[List[int]] = [[] for _ in range(G.n)]
    for eid, e in enumerate(G.edges):
        block = part[e[0]]
        if block and all(part[v] == block for v in e):
            for v in e:
                internal[v].append(eid)

    return HelperState(
        part=tuple(part),
        d=tuple(G.degree(v) for v in range(G.n)),
        d_X=tuple(len(ids) for ids in internal),
        delta_X=tuple(tuple(ids) for ids in internal),
    )


def _regroup(part: Sequence[int], count: int) -> VertexPartition:
    blocks: List[List[int]] = [[] for _ in range(count)]
    for v, block in enumerate(part):
        if block:
            blocks[block - 1].append(v)
    return VertexPartition.of(blocks)


def trim(G: Hypergraph, parts) -> VertexPartition:
    """
    Remove vertices with 2r·d_X(v) < d(v) until none remain. The fixed point
    does not depend on the removal order; the smallest id goes first.
    """
    partition = VertexPartition.of(parts, n=G.n)
    state = trim_shave_helper(G, partition)
    r = _rank(G)
    part = list(state.part)
    d_X = list(state.d_X)
    alive_edge = [False] * G.m
    for ids in state.delta_X:
        for eid in ids:
            alive_edge[eid] = True

    def violates(v: int) -> bool:
        return part[v] != 0 and 2 * r * d_X[v] < state.d[v]

    heap = [v for v in range(G.n) if violates(v)]
    heapq.heapify(heap)
    removed = 0
    while heap:
        v = heapq.heappop(heap)
        if not violates(v):
            continue
        part[v] = 0
        removed += 1
        for eid in state.delta_X[v]:
            if not alive_edge[eid]:
                continue
            alive_edge[eid] = False
            for u in G.edges[eid]:
                if u == v:
                    continue
                d_X[u] -= 1
                if violates(u):
                    heapq.heappush(heap, u)
    logger.debug("Trim removed %d vertices", removed)
    return _regroup(part, len(partition))


def shave(G: Hypergraph, parts) -> VertexPartition:
    """Keep v in its block iff r²·d_X(v) > (r² - 1)·d(v) for the input blocks."""
    partition = VertexPartition.of(parts, n=G.n)
    state = trim_shave_helper(G, partition)
    r2 = _rank(G) ** 2
    part = [
        block if block and r2 * state.d_X[v] > (r2 - 1) * state.d[v] else 0
        for v, block in enumerate(state.part)
    ]
    return _regroup(part, len(partition))


def shave_k(G: Hypergraph, parts, k: int) -> VertexPartition:
    partition = VertexPartition.of(parts, n=G.n)
    for _ in range(k):
        partition = shave(G, partition)
    return partition


# --- Property checks ---

@dataclass(frozen=True)
class TrimShaveReport:
    X: frozenset
    trimmed: frozenset
    shaved: frozenset
    lost_by_trim: int
    boundary: int
    boundary_trimmed: int
    lost_by_shave: int
    boundary_shaved: int
    r: int

    @property
    def trim_loss_ok(self) -> bool:
        return self.lost_by_trim <= self.boundary

    @property
    def trim_boundary_ok(self) -> bool:
        return self.boundary_trimmed <= 2 * self.boundary

    @property
    def shave_loss_ok(self) -> bool:
        return self.lost_by_shave <= self.r ** 2 * (self.r - 1) * self.boundary_trimmed

    @property
    def shave_boundary_ok(self) -> bool:
        return self.boundary_shaved <= self.r ** 3 * self.boundary_trimmed

    @property
    def all_hold(self) -> bool:
        return self.trim_loss_ok and self.trim_boundary_ok and self.shave_loss_ok and self.shave_boundary_ok


def _single_block(partition: VertexPartition) -> frozenset:
    return partition.blocks[0] if partition.blocks else frozenset()


def check_trim_shave_claims(G: Hypergraph, X) -> TrimShaveReport:
    """
    Evaluate X' = Trim(X) and X'' = Shave(X') against
    |E[X] - E[X']| <= |δ(X)|, |δ(X')| <= 2|δ(X)|,
    |E[X'] - E[X'']| <= r²(r-1)|δ(X')| and |δ(X'')| <= r³|δ(X')|.
    """
    X = frozenset(X)
    trimmed = _single_block(trim(G, [X]))
    shaved = _single_block(shave(G, [trimmed]))

    def inside(S):
        return edge_sets(G, S, S).inside

    return TrimShaveReport(
        X=X,
        trimmed=trimmed,
        shaved=shaved,
        lost_by_trim=len(inside(X) - inside(trimmed)),
        boundary=boundary_size(G, X),
        boundary_trimmed=boundary_size(G, trimmed),
        lost_by_shave=len(inside(trimmed) - inside(shaved)),
        boundary_shaved=boundary_size(G, shaved),
        r=_rank(G),
    )


@dataclass(frozen=True)
class IntersectionCheck:
    """One min cut's outcome for the conditional overlap claims."""

    side: frozenset
    trim_hypothesis: bool
    trim_holds: Optional[bool]
    shave_hypothesis: bool
    shave_holds: Optional[bool]
    trim_bound: float


def _overlap(block: frozenset, side: frozenset) -> int:
    return min(len(block & side), len(block - side))


def check_intersection_claims(
    G: Hypergraph, X, min_cut_sides: Sequence[frozenset], lam: int
) -> List[IntersectionCheck]:
    """
    Measure, per min cut C, the two conditional overlap claims:

    - Trim: if min(|X∩C|, |X∖C|) <= (δ/6r²)^(1/(r-1)), with δ the minimum
      degree of G, the trimmed block overlaps C on at most 3r² vertices.
    - Shave: if λ >= r(4r²)^r, both sides of C have at least 4r² vertices and
      0 < overlap <= 3r², one shave lowers the overlap by at least one.

    A conclusion is None when its hypothesis fails.
    """
    X = frozenset(X)
    r = _rank(G)
    n = G.n
    trimmed = _single_block(trim(G, [X]))
    shaved = _single_block(shave(G, [trimmed]))
    bound = (G.min_degree() / (6 * r * r)) ** (1 / (r - 1))
    big_lambda = lam >= r * (4 * r * r) ** r

    results: List[IntersectionCheck] = []
    for side in min_cut_sides:
        side = frozenset(side)
        trim_hyp = _overlap(X, side) <= bound
        trim_ok = _overlap(trimmed, side) <= 3 * r * r if trim_hyp else None

        before = _overlap(trimmed, side)
        sizes_ok = min(len(side), n - len(side)) >= 4 * r * r
        shave_hyp = big_lambda and sizes_ok and 0 < before <= 3 * r * r
        shave_ok = _overlap(shaved, side) <= before - 1 if shave_hyp else None
        results.append(IntersectionCheck(side, trim_hyp, trim_ok, shave_hyp, shave_ok, bound))
    return results


def block_summary(G: Hypergraph, partition: VertexPartition) -> Dict[str, int]:
    """Counts used by the benchmark rows."""
    covered = partition.covered()
    return {
        "blocks": len(partition),
        "covered": len(covered),
        "boundary_sum": sum(boundary_size(G, b) for b in partition.blocks),
    }
