"""
hypercut Verify Module
======================
Cross-checks every applicable solver against the oracle on one instance.
A mismatch report plus the saved instance is enough to reproduce a failure.
"""

import logging
import os
from typing import Any, Dict, List, Optional

from joblib import Parallel, delayed

from hypercut.config import SolverConfig, resolve
from hypercut.core import Hypergraph
from hypercut.driver import run_algorithm
from hypercut.graph_loader import save_hgr
from hypercut.oracle import brute_min_cut, brute_min_s_cut
from hypercut.validation import validate_label

logger = logging.getLogger(__name__)


def _plan(G: Hypergraph, lam: int, sides, config: SolverConfig) -> List[Dict[str, Any]]:
    """(row name, registry label, params, expected capacity) for each check."""
    plan = [
        {"solver": "slow", "label": "slow", "params": {}, "expected": lam},
        {"solver": "cx", "label": "cx", "params": {}, "expected": lam},
        {"solver": "expdecomp", "label": "expdecomp", "params": {}, "expected": lam},
        {"solver": "auto", "label": "auto", "params": {}, "expected": lam},
        {"solver": "auto-forced", "label": "auto", "params": {"force_large": True}, "expected": lam},
    ]
    smallest = min(min(len(side), G.n - len(side)) for side in sides)
    plan.append({"solver": "small", "label": "small", "params": {"s": smallest}, "expected": lam})

    s = min(G.n // 2, config.exhaustive_limit)
    if s >= 1:
        expected = brute_min_s_cut(G, s, config=config).capacity
        plan.append({"solver": "exhaustive", "label": "exhaustive", "params": {"s": s}, "expected": expected})
    return plan


def _check(G: Hypergraph, step: Dict[str, Any], seed: int, config: SolverConfig) -> Dict[str, Any]:
    cut, _ = run_algorithm(step["label"], G, seed=seed, params=step["params"], config=config)
    ok = cut.capacity == step["expected"]
    if not ok:
        logger.warning(
            "%s returned %d, oracle says %d", step["solver"], cut.capacity, step["expected"]
        )
    return {
        "solver": step["solver"],
        "capacity": cut.capacity,
        "expected": step["expected"],
        "side": cut.sorted_side(),
        "ok": ok,
    }


def verify_instance(
    G: Hypergraph, seed: int = 0, config: Optional[SolverConfig] = None
) -> Dict[str, Any]:
    """
    Run every solver on G and compare with the oracle.

    Returns:
        {"n", "m", "lambda", "seed", "rows": [...], "ok": bool}

    Raises:
        TooLarge: If G is beyond the oracle limit.
    """
    config = resolve(config)
    lam, sides = brute_min_cut(G, config=config)
    plan = _plan(G, lam, sides, config)

    rows = Parallel(n_jobs=min(config.threads, len(plan)), prefer="threads")(
        delayed(_check)(G, step, seed, config) for step in plan
    )
    ok = all(row["ok"] for row in rows)
    logger.info("Verified n=%d m=%d lambda=%d: %s", G.n, G.m, lam, "ok" if ok else "MISMATCH")
    return {"n": G.n, "m": G.m, "lambda": lam, "seed": seed, "rows": rows, "ok": ok}


def write_repro(G: Hypergraph, directory: str, label: str) -> str:
    """Save a failing instance as ``<directory>/<label>.hgr``."""
    label = validate_label(label)
    os.makedirs(directory, exist_ok=True)
    path = save_hgr(G, os.path.join(directory, f"{label}.hgr"))
    logger.warning("Repro instance written to %s", path)
    return path
