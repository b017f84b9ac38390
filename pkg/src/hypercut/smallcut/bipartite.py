"""
hypercut Bipartite Kernels
==========================
Incidence-graph encoding B of a hypergraph, vertex separators, kernel
extraction around a source vertex, and the kernel-based min cut for
instances with large connectivity.

Node layout: vertex v is node v (weight INF), hyperedge i is node n + i
(weight 1). INF is the sentinel m + 1.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from hypercut.config import SolverConfig, resolve
from hypercut.core import Cut, Hypergraph, ceil_log2, component_cut, make_cut
from hypercut.errors import BadParams, InvalidSeparator, NoCutFound, TooSmall, Unbounded
from hypercut.rng import derive_seed, draw_seed
from hypercut.smallcut.flow import FlowNetwork
from hypercut.sparsify import approximate_connectivity

logger = logging.getLogger(__name__)

SOURCE = "small"


# --- Domain Types ---

class BipartiteIncidence:
    """Vertex-weighted bipartite incidence graph of a hypergraph."""

    def __init__(self, G: Hypergraph):
        self.n = G.n
        self.m = G.m
        self.p = G.p
        self.r = max(G.r, 2)
        self.inf = G.m + 1
        adj: List[List[int]] = [list() for _ in range(G.n + G.m)]
        for i, e in enumerate(G.edges):
            node = G.n + i
            for v in e:
                adj[v].append(node)
                adj[node].append(v)
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def edge_count(self) -> int:
        return self.p

    def is_vertex(self, node: int) -> bool:
        return node < self.n

    def weight(self, node: int) -> int:
        return self.inf if node < self.n else 1

    def degree(self, node: int) -> int:
        return len(self.adj[node])


@dataclass(frozen=True)
class Separator:
    """(L, S, R): disjoint node sets with no edge between L and R."""

    L: FrozenSet[int]
    S: FrozenSet[int]
    R: FrozenSet[int]

    @property
    def weight(self) -> int:
        return len(self.S)


@dataclass(frozen=True)
class Kernel:
    """
    Pruned, contracted neighbourhood of ``x``. ``graph`` maps kernel nodes to
    neighbour sets; ``t`` is the contracted sink, an id outside B.
    """

    x: int
    t: int
    graph: Dict[int, FrozenSet[int]] = field(repr=False)
    Z: FrozenSet[int]
    T_x: FrozenSet[int]
    contracted: FrozenSet[int]
    degenerate: bool = False

    def vertex_count(self, B: BipartiteIncidence) -> int:
        """U_V nodes in the kernel, counting x but not the sink."""
        return sum(1 for u in self.graph if u != self.t and B.is_vertex(u))

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.graph.values()) // 2


def build_bipartite(G: Hypergraph) -> BipartiteIncidence:
    return BipartiteIncidence(G)


# --- Cut / separator correspondence ---

def separator_from_cut(G: Hypergraph, B: BipartiteIncidence, C: Iterable[int]) -> Separator:
    """
    L = C plus hyperedges inside C, S = crossing hyperedges,
    R = the rest. Weight equals the cut capacity.
    """
    C = make_cut(G, C, SOURCE).side
    L: Set[int] = set(C)
    S: Set[int] = set()
    R: Set[int] = set(range(G.n)) - C
    for i, e in enumerate(G.edges):
        inside = sum(1 for v in e if v in C)
        node = G.n + i
        if inside == len(e):
            L.add(node)
        elif inside == 0:
            R.add(node)
        else:
            S.add(node)
    return Separator(frozenset(L), frozenset(S), frozenset(R))


def _validate_separator(B: BipartiteIncidence, sep: Separator) -> None:
    if any(B.is_vertex(u) for u in sep.S):
        raise InvalidSeparator("Separator S must contain hyperedge nodes only.")
    if (sep.L & sep.S) or (sep.L & sep.R) or (sep.S & sep.R):
        raise InvalidSeparator("Separator parts overlap.")
    for u in sep.L:
        for w in B.adj[u]:
            if w in sep.R:
                raise InvalidSeparator(f"Nodes {u} in L and {w} in R are adjacent.")


def cut_from_separator(G: Hypergraph, B: BipartiteIncidence, sep: Separator) -> Cut:
    """
    Hypergraph cut C = L ∩ U_V.

    Raises:
        InvalidSeparator: If S holds vertex nodes, L touches R, or C is not
            a proper side.
    """
    _validate_separator(B, sep)
    side = frozenset(u for u in sep.L if B.is_vertex(u))
    if not side or len(side) >= G.n:
        raise InvalidSeparator(
            f"Separator L holds {len(side)} of {G.n} vertices; the side must be proper."
        )
    return make_cut(G, side, SOURCE)


def is_t_scratch(B: BipartiteIncidence, sep: Separator, t: float) -> bool:
    """
    |S| <= t, |L| <= t / (100 log₂ n) and |S_low| >= 300 |L| log₂(m + n),
    where S_low holds the separator nodes of degree at most 8t.
    """
    if len(sep.S) > t:
        return False
    if len(sep.L) > t / (100 * ceil_log2(B.n)):
        return False
    low = sum(1 for u in sep.S if B.degree(u) <= 8 * t)
    return low >= 300 * len(sep.L) * ceil_log2(B.m + B.n)


# --- Kernels ---

def sample_nodes(B: BipartiteIncidence, ell: int, rng: np.random.Generator) -> FrozenSet[int]:
    """Each node independently with probability 1/(8ℓ)."""
    draws = rng.random(B.size) < 1.0 / (8 * ell)
    return frozenset(int(u) for u in np.flatnonzero(draws))


def _kernel_for(B: BipartiteIncidence, x: int, T: FrozenSet[int]) -> Kernel:
    t = B.size
    closed_x = set(B.adj[x]) | {x}
    T_x = frozenset(T - closed_x)
    if not T_x:
        return Kernel(x, t, {}, frozenset(), T_x, frozenset(), degenerate=True)

    contracted = set(T_x)
    for u in T_x:
        if not B.is_vertex(u):
            contracted.update(w for w in B.adj[u] if B.is_vertex(w))
    contracted = frozenset(contracted)

    # B': contract into t.
    graph: Dict[int, Set[int]] = {}
    t_nbrs: Set[int] = set()
    for u in range(B.size):
        if u in contracted:
            t_nbrs.update(w for w in B.adj[u] if w not in contracted)
            continue
        nbrs = set()
        for w in B.adj[u]:
            nbrs.add(t if w in contracted else w)
        graph[u] = nbrs
    graph[t] = t_nbrs

    # B'': drop common neighbours of x and t, and edges inside N(t).
    Z = frozenset(graph[x] & graph[t])
    for z in Z:
        for w in graph.pop(z):
            if w in graph:
                graph[w].discard(z)
    near_t = graph[t]
    for u in near_t:
        graph[u] -= near_t

    # B''': keep what x reaches outside N[t], plus N[t].
    blocked = near_t | {t}
    reach = {x}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in graph[u]:
            if w not in reach and w not in blocked:
                reach.add(w)
                queue.append(w)
    keep = reach | blocked
    graph = {u: nbrs & keep for u, nbrs in graph.items() if u in keep}

    # B_x: drop degree-one neighbours of t.
    for u in [u for u in graph[t] if len(graph[u]) == 1]:
        graph.pop(u)
        graph[t].discard(u)

    frozen = {u: frozenset(nbrs) for u, nbrs in graph.items()}
    return Kernel(x, t, frozen, Z, T_x, contracted)


def find_kernels(
    B: BipartiteIncidence,
    X: Iterable[int],
    ell: int,
    rng: np.random.Generator,
    sample: Optional[Iterable[int]] = None,
) -> List[Kernel]:
    """
    One kernel per x in X from a single node sample T (drawn with
    probability 1/(8ℓ) per node unless ``sample`` is given). Kernels whose
    T_x is empty come back flagged as degenerate.
    """
    if ell < 1:
        raise BadParams(f"ℓ must be at least 1, got {ell}.")
    T = frozenset(sample) if sample is not None else sample_nodes(B, ell, rng)
    return [_kernel_for(B, x, T) for x in X]


def kernel_min_separator(K: Kernel, B: BipartiteIncidence) -> Separator:
    """
    Min (x, t)-separator of the kernel by vertex-split max flow.

    Raises:
        Unbounded: If the flow reaches the sentinel, i.e. x and t cannot be
            separated by hyperedge nodes.
    """
    if K.degenerate or K.x == K.t:
        raise InvalidSeparator("Kernel has no distinct source and sink.")
    nodes = sorted(K.graph)
    index = {u: i for i, u in enumerate(nodes)}
    net = FlowNetwork(2 * len(nodes))
    for u in nodes:
        weight = B.inf if (u == K.t or B.is_vertex(u)) else 1
        net.add_arc(2 * index[u], 2 * index[u] + 1, weight)
    for u in nodes:
        for w in K.graph[u]:
            net.add_arc(2 * index[u] + 1, 2 * index[w], B.inf)

    source, sink = 2 * index[K.x] + 1, 2 * index[K.t]
    value = net.max_flow(source, sink, B.inf)
    if value >= B.inf:
        raise Unbounded(f"Kernel flow from {K.x} reached the sentinel {B.inf}.")

    reach = net.reachable(source)
    L, S, R = set(), set(), set()
    for u in nodes:
        if u == K.x or 2 * index[u] + 1 in reach:
            L.add(u)
        elif 2 * index[u] in reach:
            S.add(u)
        else:
            R.add(u)
    if len(S) != value:
        raise RuntimeError(f"Kernel separator size {len(S)} disagrees with flow {value}.")
    return Separator(frozenset(L), frozenset(S), frozenset(R))


def lift_kernel_separator(B: BipartiteIncidence, K: Kernel, sep: Separator) -> Separator:
    """(L', S ∪ Z, R') with L' the component of x in B minus S ∪ Z."""
    S = frozenset(sep.S | K.Z)
    L = {K.x}
    queue = deque([K.x])
    while queue:
        u = queue.popleft()
        for w in B.adj[u]:
            if w not in L and w not in S:
                L.add(w)
                queue.append(w)
    L = frozenset(L)
    R = frozenset(range(B.size)) - L - S
    return Separator(L, S, R)


# --- Large-connectivity solver ---

def big_lambda_small_cut(
    G: Hypergraph,
    s: int,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SolverConfig] = None,
    k: Optional[int] = None,
) -> Cut:
    """
    Min cut with a side of at most s vertices through kernels of B.

    For each ℓ in 1, 2, 4, ..., 2^⌈log₂(3s^r)⌉ the kernel search is
    repeated ⌈c·log₂ n⌉ times; kernels with at most 9rs^r vertex nodes and
    at most 64·t·ℓ·log₂ p edges are solved and lifted back to B.

    Raises:
        NoCutFound: If no kernel produced a proper cut.
    """
    config = resolve(config)
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")
    if k is None:
        k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, SOURCE)

    r = max(G.r, 2)
    sr = s ** r
    log_n = ceil_log2(G.n)
    t = k + r + 300 * sr * log_n
    max_vertices = 9 * r * sr
    ells = [1 << i for i in range(ceil_log2(3 * sr) + 1)] if 3 * sr > 1 else [1]
    repetitions = math.ceil(config.repetitions * log_n)

    B = build_bipartite(G)
    base = draw_seed(rng)
    best: Optional[Cut] = None
    solved = 0
    for ell in ells:
        max_edges = 64 * t * ell * ceil_log2(G.p)
        for rep in range(repetitions):
            trial_rng = np.random.default_rng(derive_seed(base, "kernel", ell, rep))
            for K in find_kernels(B, range(G.n), ell, trial_rng):
                if K.degenerate:
                    continue
                if K.vertex_count(B) > max_vertices or K.edge_count() > max_edges:
                    continue
                try:
                    sep = kernel_min_separator(K, B)
                except Unbounded:
                    continue
                lifted = lift_kernel_separator(B, K, sep)
                try:
                    cut = cut_from_separator(G, B, lifted)
                except InvalidSeparator:
                    continue
                solved += 1
                if best is None or cut.capacity < best.capacity:
                    best = cut

    if best is None:
        raise NoCutFound("No kernel yielded a proper cut.")
    logger.debug("Kernel search: %d kernels solved, best capacity %d", solved, best.capacity)
    return best
