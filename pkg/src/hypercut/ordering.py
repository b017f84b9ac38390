"""
hypercut Ordering Module
========================
Exact deterministic min cut through maximum-adjacency vertex orderings.

Each phase orders the current vertices, records the cut around the last
vertex, then merges the last two. The cheapest recorded cut is a min cut.
"""

import heapq
import logging
from typing import Dict, List, Set, Tuple

from hypercut.core import Cut, Hypergraph, component_cut, is_connected, make_cut
from hypercut.errors import TooSmall

logger = logging.getLogger(__name__)

SOURCE = "slow"


class _MergeState:
    """
    Mutable working copy of a hypergraph that supports merging two vertices.
    A merged pair keeps the smaller id, so vertex 0 survives every merge.
    """

    def __init__(self, G: Hypergraph):
        self.edges: Dict[int, Set[int]] = {eid: set(e) for eid, e in enumerate(G.edges)}
        self.incidence: Dict[int, Set[int]] = {v: set(G.incidence[v]) for v in range(G.n)}
        self.groups: Dict[int, Set[int]] = {v: {v} for v in range(G.n)}

    @property
    def size(self) -> int:
        return len(self.incidence)

    def ordering(self) -> List[int]:
        """
        Maximum-adjacency order from vertex 0: the key of a vertex is the
        number of its hyperedges that already meet the prefix.
        Ties go to the smallest id.
        """
        key = {v: 0 for v in self.incidence}
        placed: Set[int] = set()
        active: Set[int] = set()
        heap: List[Tuple[int, int]] = [(0, 0)]
        order: List[int] = []

        while len(order) < self.size:
            if heap:
                neg, v = heapq.heappop(heap)
                if v in placed or -neg != key[v]:
                    continue
            else:
                # Only reached for disconnected working states.
                v = min(u for u in self.incidence if u not in placed)
            placed.add(v)
            order.append(v)
            for eid in self.incidence[v]:
                if eid in active:
                    continue
                active.add(eid)
                for u in self.edges[eid]:
                    if u not in placed:
                        key[u] += 1
                        heapq.heappush(heap, (-key[u], u))
        return order

    def merge(self, s: int, t: int) -> None:
        keep, drop = min(s, t), max(s, t)
        for eid in self.incidence.pop(drop):
            members = self.edges[eid]
            members.discard(drop)
            if keep in members:
                if len(members) == 1:
                    del self.edges[eid]
                    self.incidence[keep].discard(eid)
            else:
                members.add(keep)
                self.incidence[keep].add(eid)
        self.groups[keep] |= self.groups.pop(drop)


# --- Public API ---

def ma_ordering(G: Hypergraph) -> Tuple[List[int], int]:
    """
    One maximum-adjacency ordering of G.

    Returns:
        (ordering, pendant capacity), where the capacity is d(v_n), the
        cut around the last vertex.

    Raises:
        TooSmall: If n < 2.
    """
    if G.n < 2:
        raise TooSmall(f"Ordering needs at least 2 vertices, got n={G.n}.")
    state = _MergeState(G)
    order = state.ordering()
    return order, len(state.incidence[order[-1]])


def slow_min_cut(G: Hypergraph) -> Cut:
    """
    Exact min cut by n-1 ordering phases.

    Disconnected inputs return the zero-capacity cut on the component of
    vertex 0. The winning side is re-evaluated on G before returning.

    Raises:
        TooSmall: If n < 2.
    """
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")
    if not is_connected(G):
        return component_cut(G, SOURCE)

    state = _MergeState(G)
    best_cap = G.m + 1
    best_side: Set[int] = set()
    phase = 0
    while state.size > 1:
        order = state.ordering()
        s, t = order[-2], order[-1]
        cap = len(state.incidence[t])
        if cap < best_cap:
            best_cap, best_side = cap, set(state.groups[t])
        state.merge(s, t)
        phase += 1
        logger.debug("Phase %d: pendant cut %d (best %d)", phase, cap, best_cap)

    cut = make_cut(G, best_side, SOURCE)
    if cut.capacity != best_cap:
        raise RuntimeError(
            f"Phase cut {best_cap} disagrees with re-evaluation {cut.capacity}."
        )
    return cut
