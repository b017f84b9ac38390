"""
hypercut Core Module
====================
Canonical hypergraph representation plus the cut arithmetic every solver
shares:
- build / validate hyperedge lists
- cut capacity, degree and volume inside a vertex set
- E[S], E(S,T) and E^o(S,T) edge sets and the nested counting bound
- contraction of disjoint vertex blocks
"""

import logging
import math
from collections import namedtuple
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from hypercut.errors import (
    BadParams,
    DuplicateHyperedge,
    EmptySide,
    NotNested,
    OverlappingBlocks,
    SingletonHyperedge,
    VertexNotInSet,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, ...]
EdgeSets = namedtuple("EdgeSets", ["inside", "between", "touching"])


# --- Domain Types ---

class Hypergraph:
    """
    Immutable rank-r hypergraph on vertices ``0..n-1``.

    Hyperedges are strictly increasing tuples of size at least 2. ``multi``
    allows parallel hyperedges; it is False for simple inputs and True for
    anything produced by contraction.
    """

    __slots__ = ("n", "edges", "incidence", "p", "r", "multi")

    def __init__(self, n: int, edges: Sequence[Edge], multi: bool = False):
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(edges)
        incidence: List[List[int]] = [[] for _ in range(n)]
        for eid, e in enumerate(self.edges):
            for v in e:
                incidence[v].append(eid)
        self.incidence: Tuple[Tuple[int, ...], ...] = tuple(tuple(ids) for ids in incidence)
        self.p = sum(len(e) for e in self.edges)
        self.r = max((len(e) for e in self.edges), default=0)
        self.multi = multi

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def min_degree(self) -> int:
        return min((len(ids) for ids in self.incidence), default=0)

    def canonical(self) -> Tuple[Edge, ...]:
        """Edges sorted lexicographically; equal for equal hypergraphs."""
        return tuple(sorted(self.edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.n, self.canonical()))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, p={self.p}, r={self.r}, multi={self.multi})"


@dataclass(frozen=True)
class Cut:
    """One side of a bipartition, its capacity |δ(side)| and the producing algorithm."""

    side: FrozenSet[int]
    capacity: int
    source: str

    def sorted_side(self) -> List[int]:
        return sorted(self.side)

    def size(self, n: int) -> int:
        """Vertex count of the smaller side."""
        return min(len(self.side), n - len(self.side))


@dataclass(frozen=True)
class VertexPartition:
    """
    Pairwise-disjoint non-empty vertex blocks. Vertices outside every block
    are implicit singletons.
    """

    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen: set = set()
        for block in self.blocks:
            if not block:
                raise OverlappingBlocks("Partition blocks must be non-empty.")
            if seen & block:
                raise OverlappingBlocks(
                    f"Blocks overlap on vertices {sorted(seen & block)}."
                )
            seen |= block

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> "VertexPartition":
        """Normalise any iterable of vertex collections, dropping empty ones."""
        if isinstance(blocks, VertexPartition):
            frozen = blocks.blocks
        else:
            frozen = tuple(frozenset(int(v) for v in b) for b in blocks)
            frozen = tuple(b for b in frozen if b)
        if n is not None:
            for b in frozen:
                bad = [v for v in b if v < 0 or v >= n]
                if bad:
                    raise VertexOutOfRange(
                        f"Partition mentions vertices {sorted(bad)} outside [0,{n})."
                    )
        return cls(frozen)

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(tuple(frozenset((v,)) for v in range(n)))

    def covered(self) -> FrozenSet[int]:
        out: set = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def block_index(self) -> Dict[int, int]:
        """Vertex -> 0-based block position, for covered vertices only."""
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


class UnionFind:
    """Disjoint-set forest with union by rank and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


# --- Construction ---

def build(
    n: int,
    raw_edges: Iterable[Iterable[int]],
    allow_multi: bool = False,
    drop_singletons: bool = False,
) -> Hypergraph:
    """
    Validate and canonicalise a hyperedge list.

    Args:
        n: Vertex count.
        raw_edges: Vertex lists; order and repeats inside a list are ignored.
        allow_multi: Accept parallel hyperedges.
        drop_singletons: Silently drop hyperedges with fewer than 2 vertices
            instead of raising.

    Returns:
        A Hypergraph whose edges keep the input order.

    Raises:
        VertexOutOfRange: If a vertex id is outside [0, n).
        SingletonHyperedge: If a hyperedge has fewer than 2 distinct vertices.
        DuplicateHyperedge: If two hyperedges are equal and allow_multi is False.
    """
    if not isinstance(n, int) or n < 0:
        raise BadParams(f"Vertex count must be a non-negative integer, got {n!r}.")

    edges: List[Edge] = []
    seen: Dict[Edge, int] = {}
    for index, raw in enumerate(raw_edges):
        members = set()
        for v in raw:
            v = int(v)
            if v < 0 or v >= n:
                raise VertexOutOfRange(
                    f"Hyperedge {index} has vertex {v} outside [0,{n})."
                )
            members.add(v)
        if len(members) < 2:
            if drop_singletons:
                logger.debug("Dropping hyperedge %d of size %d", index, len(members))
                continue
            raise SingletonHyperedge(
                f"Hyperedge {index} has {len(members)} distinct vertices; at least 2 are required."
            )
        edge = tuple(sorted(members))
        if not allow_multi and edge in seen:
            raise DuplicateHyperedge(
                f"Hyperedge {index} {list(edge)} repeats hyperedge {seen[edge]}."
            )
        seen.setdefault(edge, index)
        edges.append(edge)

    return Hypergraph(n, edges, multi=allow_multi)


# --- Set helpers ---

def _vertex_set(G: Hypergraph, vertices: Iterable[int], name: str) -> FrozenSet[int]:
    out = frozenset(int(v) for v in vertices)
    bad = [v for v in out if v < 0 or v >= G.n]
    if bad:
        raise VertexOutOfRange(f"{name} mentions vertices {sorted(bad)} outside [0,{G.n}).")
    return out


def _count_inside(e: Edge, S: FrozenSet[int]) -> int:
    return sum(1 for v in e if v in S)


# --- Cut evaluation ---

def boundary_size(G: Hypergraph, X: Iterable[int]) -> int:
    """|δ(X)| for any X, including the empty set and V (both give 0)."""
    X = _vertex_set(G, X, "X")
    total = 0
    for e in G.edges:
        k = _count_inside(e, X)
        if 0 < k < len(e):
            total += 1
    return total


def cut_capacity(G: Hypergraph, C: Iterable[int]) -> int:
    """
    Number of hyperedges meeting both C and V minus C.

    Raises:
        EmptySide: If C is empty or all of V.
    """
    C = _vertex_set(G, C, "C")
    if not C or len(C) >= G.n:
        raise EmptySide(
            f"A cut side must be non-empty and proper; got {len(C)} of {G.n} vertices."
        )
    return boundary_size(G, C)


def make_cut(G: Hypergraph, side: Iterable[int], source: str) -> Cut:
    side = frozenset(side)
    return Cut(side=side, capacity=cut_capacity(G, side), source=source)


def degree_within(G: Hypergraph, v: int, X: Iterable[int]) -> int:
    """d_X(v): hyperedges at v that lie entirely inside X."""
    X = _vertex_set(G, X, "X")
    if v not in X:
        raise VertexNotInSet(f"Vertex {v} is not in the given set.")
    return sum(1 for eid in G.incidence[v] if all(u in X for u in G.edges[eid]))


def volume(G: Hypergraph, S: Iterable[int], within: Optional[Iterable[int]] = None) -> int:
    """vol(S), or vol_X(S) = sum of d_X(v) over S when ``within`` is given."""
    S = _vertex_set(G, S, "S")
    if within is None:
        return sum(G.degree(v) for v in S)
    X = _vertex_set(G, within, "within")
    total = 0
    for v in S:
        total += sum(1 for eid in G.incidence[v] if all(u in X for u in G.edges[eid]))
    return total


def edge_sets(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> EdgeSets:
    """
    Return (E[S], E(S,T), E^o(S,T)) as frozensets of edge ids:
    hyperedges inside S; hyperedges inside S∪T meeting both; hyperedges
    meeting both.
    """
    S = _vertex_set(G, S, "S")
    T = _vertex_set(G, T, "T")
    union = S | T
    inside, between, touching = set(), set(), set()
    for eid, e in enumerate(G.edges):
        meets_s = any(v in S for v in e)
        meets_t = any(v in T for v in e)
        if all(v in S for v in e):
            inside.add(eid)
        if meets_s and meets_t:
            touching.add(eid)
            if all(v in union for v in e):
                between.add(eid)
    return EdgeSets(frozenset(inside), frozenset(between), frozenset(touching))


def check_nested_count_bound(
    G: Hypergraph, T: Iterable[int], S: Iterable[int]
) -> Tuple[int, float]:
    """
    For T ⊆ S return ``(|E(T, S∖T)|, (vol_S(T) - r|E[T]|) / (r-1))``.

    The first value is never smaller than the second.
    """
    T = _vertex_set(G, T, "T")
    S = _vertex_set(G, S, "S")
    if not T <= S:
        raise NotNested(f"T is not contained in S (extra vertices {sorted(T - S)}).")
    r = max(G.r, 2)
    crossing = edge_sets(G, T, S - T).between
    inside_t = edge_sets(G, T, T).inside
    rhs = (volume(G, T, within=S) - r * len(inside_t)) / (r - 1)
    return len(crossing), rhs


# --- Connectivity ---

def components(G: Hypergraph) -> List[FrozenSet[int]]:
    """Connected components, ordered by smallest vertex."""
    uf = UnionFind(G.n)
    for e in G.edges:
        first = e[0]
        for v in e[1:]:
            uf.union(first, v)
    groups: Dict[int, List[int]] = {}
    for v in range(G.n):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_connected(G: Hypergraph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def component_cut(G: Hypergraph, source: str) -> Cut:
    """Zero-capacity cut: the component of vertex 0 of a disconnected G."""
    comps = components(G)
    if len(comps) < 2:
        raise EmptySide("Hypergraph is connected; no zero-capacity cut exists.")
    return Cut(side=comps[0], capacity=0, source=source)


# --- Contraction ---

def contract(G: Hypergraph, partition) -> Tuple[Hypergraph, List[int]]:
    """
    Contract every block of ``partition`` into one vertex.

    New ids follow the smallest original vertex of each class, so an
    all-singletons partition is the identity. Hyperedges that collapse to a
    single vertex are dropped; parallel hyperedges are kept.

    Returns:
        (contracted hypergraph with multi=True, list mapping old -> new id)
    """
    partition = VertexPartition.of(partition, n=G.n)
    rep = list(range(G.n))
    for block in partition.blocks:
        low = min(block)
        for v in block:
            rep[v] = low
    new_id: Dict[int, int] = {}
    for v in range(G.n):
        if rep[v] == v:
            new_id[v] = len(new_id)
    vmap = [new_id[rep[v]] for v in range(G.n)]

    edges: List[Edge] = []
    for e in G.edges:
        image = tuple(sorted({vmap[v] for v in e}))
        if len(image) >= 2:
            edges.append(image)
    logger.debug("Contracted n=%d -> %d, m=%d -> %d", G.n, len(new_id), G.m, len(edges))
    return Hypergraph(len(new_id), edges, multi=True), vmap


def lift_side(side: Iterable[int], vmap: Sequence[int]) -> FrozenSet[int]:
    """Original vertices whose image lies in ``side``."""
    side = frozenset(side)
    return frozenset(v for v, image in enumerate(vmap) if image in side)


def ceil_log2(x: float) -> int:
    """⌈log₂ x⌉, at least 1, for repetition and threshold counts."""
    if x <= 2:
        return 1
    return max(1, math.ceil(math.log2(x)))
