"""
hypercut Directed Search
========================
Directed encoding D_G of a hypergraph and the randomized local BFS search
for a min cut whose small side contains a given vertex.

Node layout: vertex v is node v, hyperedge i has e_in = n + i and
e_out = n + m + i. Arc layout: the m unit arcs (e_in, e_out) come first,
then per hyperedge and member v the sentinel arcs (v, e_in), (e_out, v).
"""

import logging
import math
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from hypercut.config import SolverConfig, resolve
from hypercut.core import (
    Cut,
    Hypergraph,
    ceil_log2,
    component_cut,
    cut_capacity,
)
from hypercut.errors import InvalidDirectedCut, NoCutFound, TooSmall
from hypercut.ordering import slow_min_cut
from hypercut.rng import derive_seed, draw_seed
from hypercut.sparsify import approximate_connectivity

logger = logging.getLogger(__name__)

SOURCE = "small"
FORWARD = 1
BACKWARD = -1


class DirectedCutGraph:
    """
    D_G with per-arc flow counts. Residual capacity of an arc is cap - flow
    forwards and flow backwards; a fresh graph has every flow at 0.
    """

    def __init__(self, G: Hypergraph):
        self.n = G.n
        self.m = G.m
        self.p = G.p
        self.r = max(G.r, 2)
        self.inf = G.m + 1
        self.size = G.n + 2 * G.m

        tails: List[int] = []
        heads: List[int] = []
        caps: List[int] = []
        for i in range(G.m):
            tails.append(self.e_in(i))
            heads.append(self.e_out(i))
            caps.append(1)
        for i, e in enumerate(G.edges):
            for v in e:
                tails.extend((v, self.e_out(i)))
                heads.extend((self.e_in(i), v))
                caps.extend((self.inf, self.inf))
        self.tail: Tuple[int, ...] = tuple(tails)
        self.head: Tuple[int, ...] = tuple(heads)
        self.cap: Tuple[int, ...] = tuple(caps)

        incident: List[List[int]] = [[] for _ in range(self.size)]
        for arc in range(len(self.tail)):
            incident[self.tail[arc]].append(arc)
            incident[self.head[arc]].append(arc)
        self.incident: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in incident)
        self.flow: List[int] = [0] * len(self.tail)

    @property
    def arc_count(self) -> int:
        return len(self.tail)

    def e_in(self, i: int) -> int:
        return self.n + i

    def e_out(self, i: int) -> int:
        return self.n + self.m + i

    def reset(self) -> None:
        self.flow = [0] * len(self.tail)

    def residual_steps(self, u: int):
        """Yield (arc, direction, next node) for every residual arc leaving u."""
        for arc in self.incident[u]:
            if self.tail[arc] == u and self.flow[arc] < self.cap[arc]:
                yield arc, FORWARD, self.head[arc]
            if self.head[arc] == u and self.flow[arc] > 0:
                yield arc, BACKWARD, self.tail[arc]


def build_directed(G: Hypergraph) -> DirectedCutGraph:
    return DirectedCutGraph(G)


def _check_directed_side(D: DirectedCutGraph, C: Iterable[int]) -> FrozenSet[int]:
    C = frozenset(C)
    vertices = sum(1 for v in C if v < D.n)
    if vertices == 0 or vertices == D.n:
        raise InvalidDirectedCut(
            f"Directed cut must hold between 1 and {D.n - 1} vertex nodes, got {vertices}."
        )
    return C


def directed_cut_weight(D: DirectedCutGraph, C: Iterable[int]) -> int:
    """Residual capacity leaving C under the current flows."""
    C = _check_directed_side(D, C)
    total = 0
    for arc in range(D.arc_count):
        tail_in = D.tail[arc] in C
        head_in = D.head[arc] in C
        if tail_in and not head_in:
            total += D.cap[arc] - D.flow[arc]
        elif head_in and not tail_in:
            total += D.flow[arc]
    return total


def original_cut_weight(D: DirectedCutGraph, C: Iterable[int]) -> int:
    """Weight of arcs leaving C in the unmodified encoding."""
    C = _check_directed_side(D, C)
    return sum(
        D.cap[arc]
        for arc in range(D.arc_count)
        if D.tail[arc] in C and D.head[arc] not in C
    )


# --- Randomized local search ---

def search_budget(k: int, s: int, r: int) -> Tuple[int, float]:
    """(mark cap 512k²rs^r, stop probability 1/(8r(4s^r + k)))."""
    sr = s ** r
    return 512 * k * k * r * sr, 1.0 / (8 * r * (4 * sr + k))


def small_size_small_min_cut(
    D: DirectedCutGraph,
    x: int,
    k: int,
    s: int,
    rng: np.random.Generator,
) -> Optional[FrozenSet[int]]:
    """
    Up to k+1 BFS rounds from x over residual arcs.

    Every newly explored arc is marked; the search aborts (None) once the
    mark cap is reached, and each marked arc ends the round with the stop
    probability, in which case the tree path from x to the arc's head is
    augmented by one unit. A round that explores everything returns its
    node set, provided it leaves some vertex node outside.

    Flows in D are changed in place.
    """
    cap, stop_probability = search_budget(k, s, D.r)
    marked = set()

    for round_no in range(1, k + 2):
        parent: Dict[int, Tuple[int, int]] = {}
        visited = {x}
        queue = deque([x])
        target: Optional[int] = None

        while queue and target is None:
            u = queue.popleft()
            for arc, direction, w in D.residual_steps(u):
                key = (arc, direction)
                if key in marked:
                    if w not in visited:
                        visited.add(w)
                        parent[w] = (arc, direction)
                        queue.append(w)
                    continue
                marked.add(key)
                if len(marked) >= cap:
                    logger.debug("Search from %d aborted after %d marks", x, len(marked))
                    return None
                if w not in visited:
                    visited.add(w)
                    parent[w] = (arc, direction)
                    queue.append(w)
                if rng.random() < stop_probability:
                    target = w
                    break

        if target is None:
            side = frozenset(visited)
            inside = sum(1 for v in side if v < D.n)
            if inside == D.n:
                return None
            weight = original_cut_weight(D, side)
            if weight > round_no - 1:
                raise RuntimeError(
                    f"Round {round_no} returned a directed cut of weight {weight}."
                )
            logger.debug("Search from %d closed in round %d at weight %d", x, round_no, weight)
            return side

        node = target
        while node != x:
            arc, direction = parent[node]
            D.flow[arc] += direction
            node = D.tail[arc] if direction == FORWARD else D.head[arc]

    return None


def small_lambda_small_cut(
    G: Hypergraph,
    s: int,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SolverConfig] = None,
    k: Optional[int] = None,
) -> Cut:
    """
    Min cut with a side of at most s vertices, for small connectivity.

    Small inputs (p <= 512k²rs^r, or ``config.search_floor`` when set) go to
    slow_min_cut. Otherwise the local search runs from every vertex,
    ⌈c·log₂ n⌉ times each, on a fresh flow state per trial, and the
    cheapest proper cut wins.

    Raises:
        NoCutFound: If every trial came back empty.
    """
    config = resolve(config)
    if G.n < 2:
        raise TooSmall(f"A cut needs at least 2 vertices, got n={G.n}.")
    if k is None:
        k = approximate_connectivity(G)
    if k == 0:
        return component_cut(G, SOURCE)

    r = max(G.r, 2)
    cap, _ = search_budget(k, s, r)
    floor = cap if config.search_floor is None else config.search_floor
    if G.p <= floor:
        logger.debug("p=%d within budget %d; using the ordering solver", G.p, floor)
        return slow_min_cut(G)

    base = draw_seed(rng)
    repetitions = math.ceil(config.repetitions * ceil_log2(G.n))
    D = build_directed(G)
    best: Optional[Cut] = None
    trials = 0
    for rep in range(repetitions):
        for x in range(G.n):
            D.reset()
            trial_rng = np.random.default_rng(derive_seed(base, "trial", x, rep))
            found = small_size_small_min_cut(D, x, k, s, trial_rng)
            trials += 1
            if found is None:
                continue
            side = frozenset(v for v in found if v < G.n)
            capacity = cut_capacity(G, side)
            if best is None or capacity < best.capacity:
                best = Cut(side=side, capacity=capacity, source=SOURCE)

    if best is None:
        raise NoCutFound(f"All {trials} local search trials returned nothing.")
    logger.debug("Local search best capacity %d over %d trials", best.capacity, trials)
    return best
