"""
hypercut Expander Module
========================
Expander decomposition of a hypergraph through its star expansion.

Blocks are refined by certify-or-split:
- small blocks: exact minimum-conductance split by enumeration
- large blocks: best of a spectral sweep cut and seeded local passes
A block is split while its best split has conductance below φ'.
Only exactly checked blocks are flagged as certified.
"""

import hashlib
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from hypercut.config import SolverConfig, resolve
from hypercut.core import Hypergraph, VertexPartition, boundary_size
from hypercut.errors import BadPhi
from hypercut.rng import block_digest, derive_seed, instance_digest

logger = logging.getLogger(__name__)

PHI_TOLERANCE = 1e-12
MAX_CLIMB_SWEEPS = 10


# --- Domain Types ---

@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph on ``0..n-1``; parallel edges are repeated pairs."""

    n: int
    edges: Tuple[Tuple[int, int], ...]

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def digest(self) -> str:
        text = ";".join(f"{u},{v}" for u, v in self.edges)
        return hashlib.sha256(f"{self.n}|{text}".encode("ascii")).hexdigest()


@dataclass(frozen=True)
class Decomposition:
    partition: VertexPartition
    phi: float
    crossing_edges: int
    certified: Tuple[bool, ...]
    boundary_sum: int

    def to_dict(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.partition.blocks],
            "phi": self.phi,
            "crossing_edges": self.crossing_edges,
            "certified": list(self.certified),
            "boundary_sum": self.boundary_sum,
        }


# --- Star expansion ---

def star_expand(G: Hypergraph) -> MultiGraph:
    """Replace each hyperedge by a star centred at its smallest vertex."""
    edges = []
    for e in G.edges:
        center = e[0]
        edges.extend((center, u) for u in e[1:])
    return MultiGraph(G.n, tuple(edges))


def multigraph_conductance(mg: MultiGraph, X, S) -> float:
    """
    |E(S, X∖S)| / min(vol(S), vol(X∖S)) with full multigraph degrees.
    A zero denominator gives 0.
    """
    X = frozenset(X)
    S = frozenset(S) & X
    rest = X - S
    deg = mg.degrees()
    crossing = sum(1 for u, v in mg.edges if (u in S and v in rest) or (v in S and u in rest))
    denominator = min(int(deg[list(S)].sum()) if S else 0, int(deg[list(rest)].sum()) if rest else 0)
    return 0.0 if denominator == 0 else crossing / denominator


# --- Block-local view ---

class _Block:
    """Induced subgraph of one block, with local indices and full degrees."""

    def __init__(self, members: Sequence[int], mg: MultiGraph, deg: np.ndarray, adjacency: Dict[int, List[int]]):
        self.members = list(members)
        self.k = len(self.members)
        local = {v: i for i, v in enumerate(self.members)}
        heads, tails = [], []
        for v in self.members:
            for u in adjacency.get(v, ()):
                if u in local and v < u:
                    heads.append(local[v])
                    tails.append(local[u])
        self.heads = np.asarray(heads, dtype=np.int64)
        self.tails = np.asarray(tails, dtype=np.int64)
        self.deg = deg[self.members].astype(np.float64)
        self.neighbours: List[List[int]] = [[] for _ in range(self.k)]
        for a, b in zip(heads, tails):
            self.neighbours[a].append(b)
            self.neighbours[b].append(a)

    def matrix(self) -> sp.csr_matrix:
        data = np.ones(2 * len(self.heads))
        rows = np.concatenate([self.heads, self.tails])
        cols = np.concatenate([self.tails, self.heads])
        return sp.coo_matrix((data, (rows, cols)), shape=(self.k, self.k)).tocsr()

    def to_vertices(self, mask: np.ndarray) -> frozenset:
        return frozenset(self.members[i] for i in np.flatnonzero(mask))


def _conductance_from_counts(crossing, vol_s, total):
    denominator = np.minimum(vol_s, total - vol_s)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denominator == 0, 0.0, crossing / np.where(denominator == 0, 1, denominator))


def _exact_split(block: _Block) -> Tuple[float, np.ndarray]:
    """Enumerate every split that keeps local vertex 0 on the S side."""
    k = block.k
    count = (1 << (k - 1)) - 1
    masks = np.arange(count, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(k - 1, dtype=np.int64)) & 1).astype(bool)
    membership = np.concatenate([np.ones((count, 1), dtype=bool), bits], axis=1)
    vol_s = membership @ block.deg
    if len(block.heads):
        crossing = (membership[:, block.heads] != membership[:, block.tails]).sum(axis=1)
    else:
        crossing = np.zeros(count)
    values = _conductance_from_counts(crossing.astype(np.float64), vol_s, block.deg.sum())
    best = int(np.argmin(values))
    return float(values[best]), membership[best]


def _sweep(block: _Block, order: np.ndarray) -> Tuple[float, np.ndarray]:
    """Best prefix of ``order`` by conductance, via a difference array."""
    k = block.k
    position = np.empty(k, dtype=np.int64)
    position[order] = np.arange(k)
    lo = np.minimum(position[block.heads], position[block.tails])
    hi = np.maximum(position[block.heads], position[block.tails])
    diff = np.zeros(k + 1)
    np.add.at(diff, lo + 1, 1)
    np.add.at(diff, hi + 1, -1)
    crossing = np.cumsum(diff)[1:k]
    vol_s = np.cumsum(block.deg[order])[: k - 1]
    values = _conductance_from_counts(crossing, vol_s, block.deg.sum())
    cut = int(np.argmin(values))
    mask = np.zeros(k, dtype=bool)
    mask[order[: cut + 1]] = True
    return float(values[cut]), mask


def _spectral_split(block: _Block, rng: np.random.Generator, iterations: int) -> Tuple[float, np.ndarray]:
    """
    Sweep over D^{-1/2}v, where v approximates the second eigenvector of the
    lazy normalised adjacency (I + D^{-1/2} A D^{-1/2}) / 2.
    """
    inv_sqrt = 1.0 / np.sqrt(block.deg)
    walk = sp.diags(inv_sqrt) @ block.matrix() @ sp.diags(inv_sqrt)
    trivial = np.sqrt(block.deg)
    trivial /= np.linalg.norm(trivial)

    vec = rng.standard_normal(block.k)
    for _ in range(iterations):
        vec -= trivial * (trivial @ vec)
        vec = 0.5 * (vec + walk @ vec)
        norm = np.linalg.norm(vec)
        if norm == 0:
            break
        vec /= norm
    order = np.argsort(vec * inv_sqrt, kind="stable")
    return _sweep(block, order)


def _local_split(block: _Block, rng: np.random.Generator) -> Tuple[float, np.ndarray]:
    """Grow a BFS ball from a random vertex, then flip single vertices while that helps."""
    k = block.k
    start = int(rng.integers(k))
    target = int(rng.integers(1, k))
    mask = np.zeros(k, dtype=bool)
    queue = deque([start])
    mask[start] = True
    grown = 1
    while queue and grown < target:
        u = queue.popleft()
        for w in block.neighbours[u]:
            if not mask[w] and grown < target:
                mask[w] = True
                grown += 1
                queue.append(w)

    total = block.deg.sum()
    into_s = np.zeros(k, dtype=np.int64)
    for u in np.flatnonzero(mask):
        for w in block.neighbours[u]:
            into_s[w] += 1
    internal = np.array([len(nb) for nb in block.neighbours], dtype=np.int64)
    crossing = int(sum(internal[u] - into_s[u] for u in np.flatnonzero(mask)))
    vol_s = float(block.deg[mask].sum())
    size = int(mask.sum())

    def score(c, vol):
        denominator = min(vol, total - vol)
        return 0.0 if denominator == 0 else c / denominator

    current = score(crossing, vol_s)
    for _ in range(MAX_CLIMB_SWEEPS):
        improved = False
        for u in range(k):
            if mask[u]:
                if size == 1:
                    continue
                new_crossing = crossing - (internal[u] - into_s[u]) + into_s[u]
                new_vol = vol_s - block.deg[u]
            else:
                if size == k - 1:
                    continue
                new_crossing = crossing - into_s[u] + (internal[u] - into_s[u])
                new_vol = vol_s + block.deg[u]
            value = score(new_crossing, new_vol)
            if value < current:
                step = -1 if mask[u] else 1
                mask[u] = not mask[u]
                size += step
                for w in block.neighbours[u]:
                    into_s[w] += step
                crossing, vol_s, current = new_crossing, new_vol, value
                improved = True
        if not improved:
            break
    return current, mask.copy()


# --- Decomposition ---

def _decompose(
    mg: MultiGraph,
    phi_prime: float,
    seed: int,
    digest: str,
    config: SolverConfig,
) -> List[Tuple[frozenset, bool]]:
    deg = mg.degrees()
    adjacency: Dict[int, List[int]] = {}
    for u, v in mg.edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)

    finished: List[Tuple[frozenset, bool]] = []
    worklist: List[List[int]] = [list(range(mg.n))] if mg.n else []
    while worklist:
        members = sorted(worklist.pop())
        if len(members) == 1:
            finished.append((frozenset(members), True))
            continue

        block = _Block(members, mg, deg, adjacency)
        exact = block.k <= config.exact_limit
        if exact:
            value, mask = _exact_split(block)
        else:
            n_parts, labels = connected_components(block.matrix(), directed=False)
            if n_parts > 1:
                value, mask = 0.0, labels == labels[0]
            else:
                rng = np.random.default_rng(derive_seed(seed, digest, block_digest(members)))
                value, mask = _spectral_split(block, rng, config.power_iterations)
                for _ in range(config.local_passes):
                    candidate, candidate_mask = _local_split(block, rng)
                    if candidate < value:
                        value, mask = candidate, candidate_mask

        if value < phi_prime:
            side = block.to_vertices(mask)
            logger.debug("Split block of %d at conductance %.4f (%d | %d)",
                         block.k, value, len(side), block.k - len(side))
            worklist.append(sorted(side))
            worklist.append(sorted(set(members) - side))
        else:
            if not exact:
                logger.warning(
                    "Block of %d vertices accepted without an exact conductance check", block.k
                )
            finished.append((frozenset(members), exact))

    finished.sort(key=lambda item: min(item[0]))
    return finished


def graph_expander_decomposition(
    mg: MultiGraph,
    phi_prime: float,
    seed: int = 0,
    config: Optional[SolverConfig] = None,
) -> VertexPartition:
    """
    Split ``mg`` until no block has a split of conductance below ``phi_prime``.

    Raises:
        BadPhi: Unless 0 < phi_prime <= 1.
    """
    if not (0 < phi_prime <= 1 + PHI_TOLERANCE):
        raise BadPhi(f"Graph conductance target must lie in (0, 1], got {phi_prime}.")
    blocks = _decompose(mg, phi_prime, seed, mg.digest(), resolve(config))
    return VertexPartition(tuple(b for b, _ in blocks))


def hypergraph_expander_decomposition(
    G: Hypergraph,
    phi: float,
    seed: int = 0,
    config: Optional[SolverConfig] = None,
) -> Decomposition:
    """
    Decompose G by running the graph decomposition on its star expansion
    with φ' = (r-1)φ.

    Raises:
        BadPhi: If φ <= 0 or φ > 1/(r-1).
    """
    r = max(G.r, 2)
    if not (0 < phi <= 1 / (r - 1) + PHI_TOLERANCE):
        raise BadPhi(f"Conductance target must lie in (0, 1/{r - 1}] for rank {r}, got {phi}.")
    phi_prime = min(1.0, (r - 1) * phi)

    blocks = _decompose(star_expand(G), phi_prime, seed, instance_digest(G), resolve(config))
    partition = VertexPartition(tuple(b for b, _ in blocks))

    index = partition.block_index()
    crossing = sum(1 for e in G.edges if len({index[v] for v in e}) > 1)
    boundary = sum(boundary_size(G, b) for b in partition.blocks)
    logger.debug("Decomposition: %d blocks, %d crossing hyperedges", len(partition), crossing)
    return Decomposition(
        partition=partition,
        phi=phi,
        crossing_edges=crossing,
        certified=tuple(flag for _, flag in blocks),
        boundary_sum=boundary,
    )
