"""
hypercut Sparsify Module
========================
k-certificates built from greedy spanning rounds, and the connectivity
estimate that every composite solver starts from.
"""

import logging
from typing import List

from hypercut.core import Hypergraph, UnionFind, is_connected
from hypercut.errors import BadK, TooSmall
from hypercut.ordering import slow_min_cut

logger = logging.getLogger(__name__)


def certificate_edge_ids(G: Hypergraph, k: int) -> List[int]:
    """
    Edge ids kept by k greedy spanning rounds, in input order.

    Round i scans the edges not yet kept and keeps e when it joins at least
    two components of the forest built from round i's own edges.

    Raises:
        BadK: If k < 1.
    """
    if not isinstance(k, int) or k < 1:
        raise BadK(f"Certificate parameter k must be a positive integer, got {k!r}.")

    kept = [False] * G.m
    for round_no in range(k):
        uf = UnionFind(G.n)
        added = 0
        for eid, e in enumerate(G.edges):
            if kept[eid]:
                continue
            roots = {uf.find(v) for v in e}
            if len(roots) < 2:
                continue
            first = e[0]
            for v in e[1:]:
                uf.union(first, v)
            kept[eid] = True
            added += 1
        logger.debug("Certificate round %d kept %d edges", round_no + 1, added)
        if added == 0:
            break
    return [eid for eid in range(G.m) if kept[eid]]


def certificate(G: Hypergraph, k: int) -> Hypergraph:
    """
    Sub-hypergraph G' with |δ_G'(C)| >= min(k, |δ_G(C)|) for every cut C and
    at most k(n-1) hyperedges.
    """
    ids = certificate_edge_ids(G, k)
    if len(ids) == G.m:
        return G
    return Hypergraph(G.n, [G.edges[eid] for eid in ids], multi=G.multi)


def approximate_connectivity(G: Hypergraph) -> int:
    """
    Return k with λ < k <= 3λ, or 0 when G is disconnected.

    Doubles k̂ from 1; once the exact min cut of certificate(G, k̂) falls
    below k̂ it equals λ, and λ + 1 is returned.

    Raises:
        TooSmall: If n < 2.
    """
    if G.n < 2:
        raise TooSmall(f"Connectivity needs at least 2 vertices, got n={G.n}.")
    if not is_connected(G):
        logger.debug("Disconnected input; connectivity estimate is 0")
        return 0

    guess = 1
    while True:
        lam = slow_min_cut(certificate(G, guess)).capacity
        if lam < guess:
            logger.debug("Connectivity %d confirmed with certificate k=%d", lam, guess)
            return lam + 1
        guess *= 2
