"""
hypercut Bench Module
=====================
Benchmark suites producing one pandas row per (instance, solver) run.

Suites:
- random: oracle-scale corpus, every solver checked against the oracle
- ordering: slow_min_cut at fixed density over doubling n
- trimshave: one trim plus 3r² shaves over doubling size p
- appendix: the two adversarial fixtures
"""

import logging
import time
from math import comb
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from hypercut.config import SolverConfig, resolve
from hypercut.core import Hypergraph, VertexPartition, cut_capacity
from hypercut.driver import run_algorithm
from hypercut.errors import BadParams
from hypercut.generators import (
    appendix_b_pair,
    appendix_c_blocks,
    gen_nontrivial_example,
    gen_random,
    gen_tight_example,
)
from hypercut.graph_loader import write_text_atomic
from hypercut.oracle import brute_min_cut, brute_min_s_cut
from hypercut.ordering import slow_min_cut
from hypercut.rng import derive_seed, make_rng
from hypercut.trimshave import shave_k, trim

logger = logging.getLogger(__name__)

RANDOM_SOLVERS = ("slow", "cx", "expdecomp", "auto", "exhaustive")
ORDERING_SIZES = (50, 100, 200, 400)
TRIMSHAVE_SIZES = (10_000, 20_000, 40_000, 80_000)

# Columns used for the log-log fit of each scaling suite.
SCALING_AXES = {"ordering": ("n", "ms"), "trimshave": ("p", "ms")}


def _elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def _size(G: Hypergraph) -> int:
    return sum(len(e) for e in G.edges)


# --- Suite bodies ---

def _random_instance(index: int, seed: int, config: SolverConfig) -> List[dict]:
    rng = make_rng(seed, "bench-random", index)
    n = int(rng.integers(4, 11))
    r = int(rng.integers(2, 6))
    most = sum(comb(n, size) for size in range(2, min(r, n) + 1))
    m = int(rng.integers(n - 1, min(40, most) + 1))
    G = gen_random(n, r, m, seed=derive_seed(seed, "instance", index))
    lam, _ = brute_min_cut(G, config=config)

    s = min(n // 2, config.exhaustive_limit)
    rows = []
    for label in RANDOM_SOLVERS:
        params = {"s": s} if label == "exhaustive" else {}
        start = time.perf_counter()
        cut, _ = run_algorithm(label, G, seed=derive_seed(seed, "run", index), params=params, config=config)
        ms = _elapsed_ms(start)
        # Exhaustive search only sees sides of at most s vertices.
        expected = brute_min_s_cut(G, s, config=config).capacity if label == "exhaustive" else lam
        rows.append({
            "instance": index, "n": n, "m": G.m, "p": _size(G), "r": G.r,
            "solver": label, "capacity": cut.capacity, "lambda": lam,
            "ok": cut.capacity == expected, "ms": ms,
        })
    return rows


def _ordering_instance(n: int, seed: int, config: SolverConfig) -> List[dict]:
    G = gen_random(n, 3, 4 * n, seed=derive_seed(seed, "bench-ordering", n))
    start = time.perf_counter()
    cut = slow_min_cut(G)
    return [{
        "instance": n, "n": n, "m": G.m, "p": _size(G), "r": G.r,
        "solver": "slow", "capacity": cut.capacity, "ms": _elapsed_ms(start),
    }]


def _trimshave_instance(p: int, seed: int, config: SolverConfig) -> List[dict]:
    r = 3
    n = max(10, p // 10)
    m = int(p / 2.5)
    G = gen_random(n, r, m, seed=derive_seed(seed, "bench-trimshave", p))
    half = make_rng(seed, "bench-halves", p).permutation(n)
    partition = VertexPartition.of([half[: n // 2].tolist(), half[n // 2:].tolist()], n=n)

    start = time.perf_counter()
    parts = shave_k(G, trim(G, partition), 3 * r * r)
    ms = _elapsed_ms(start)
    return [{
        "instance": p, "n": n, "m": G.m, "p": _size(G), "r": G.r,
        "solver": "trimshave", "capacity": len(parts.covered()), "ms": ms,
    }]


def _appendix_instance(name: str, seed: int, config: SolverConfig) -> List[dict]:
    if name == "appendixB":
        G = gen_nontrivial_example(100)
        label, expected = "cx", 147
        witness = cut_capacity(G, appendix_b_pair(100, 0))
    else:
        G = gen_tight_example(64, 3)
        label, expected = "slow", 21
        witness = max(cut_capacity(G, block) for block in appendix_c_blocks(64))
    start = time.perf_counter()
    cut, _ = run_algorithm(label, G, seed=seed, config=config)
    ms = _elapsed_ms(start)
    return [{
        "instance": name, "n": G.n, "m": G.m, "p": _size(G), "r": G.r,
        "solver": label, "capacity": cut.capacity, "lambda": expected,
        "ok": cut.capacity == expected and witness == expected, "ms": ms,
    }]


_SUITES: Dict[str, Callable[[int, int, SolverConfig], List[dict]]] = {
    "random": _random_instance,
    "ordering": _ordering_instance,
    "trimshave": _trimshave_instance,
    "appendix": _appendix_instance,
}

SUITE_NAMES = tuple(_SUITES)


def _instances(name: str, count: Optional[int], sizes: Optional[Sequence[int]]) -> list:
    if name == "random":
        return list(range(count or 100))
    if name == "ordering":
        return list(sizes or ORDERING_SIZES)
    if name == "trimshave":
        return list(sizes or TRIMSHAVE_SIZES)
    return ["appendixB", "appendixC"]


# --- Public API ---

def run_suite(
    name: str,
    seed: int = 0,
    config: Optional[SolverConfig] = None,
    count: Optional[int] = None,
    sizes: Optional[Sequence[int]] = None,
    quiet: bool = False,
) -> pd.DataFrame:
    """
    Run a benchmark suite and collect its rows.

    Args:
        name: One of SUITE_NAMES.
        count: Instance count for the random suite.
        sizes: Size ladder for the scaling suites.
        quiet: Hide the progress bar.

    Raises:
        BadParams: For an unknown suite.
    """
    body = _SUITES.get(name)
    if body is None:
        raise BadParams(f"Unknown suite '{name}'. Valid: {list(SUITE_NAMES)}")
    config = resolve(config)
    items = _instances(name, count, sizes)

    jobs = Parallel(n_jobs=config.threads, prefer="threads", return_as="generator")(
        delayed(body)(item, seed, config) for item in items
    )
    rows: List[dict] = []
    for batch in tqdm(jobs, total=len(items), desc=name, disable=quiet):
        rows.extend(batch)

    df = pd.DataFrame(rows)
    df.insert(0, "suite", name)
    logger.info("Suite %s: %d rows", name, len(df))
    return df


def scaling_slope(df: pd.DataFrame, x: str, y: str) -> float:
    """Slope of log(y) against log(x), fitted with numpy.polyfit."""
    clean = df[(df[x] > 0) & (df[y] > 0)]
    if len(clean) < 2:
        raise BadParams(f"Need at least two positive ({x}, {y}) points, got {len(clean)}.")
    slope, _ = np.polyfit(np.log(clean[x].to_numpy(float)), np.log(clean[y].to_numpy(float)), 1)
    return float(slope)


def write_csv(df: pd.DataFrame, path: Optional[str] = None) -> Optional[str]:
    """CSV to ``path`` (atomic), or the CSV text when no path is given."""
    text = df.to_csv(index=False)
    if path is None:
        return text
    return write_text_atomic(text, path, prefix="bench_")
