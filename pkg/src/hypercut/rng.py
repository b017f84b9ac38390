"""
hypercut Seed Splitter
======================
Counter-based seed derivation. A child seed is a pure function of the parent
seed and a label path, so a trial sees the same stream whether it runs first,
last, or on another thread.
"""

import hashlib
from typing import Optional

import numpy as np


SEED_BITS = 64
SEED_MASK = (1 << SEED_BITS) - 1


def derive_seed(seed: int, *labels) -> int:
    """Hash ``seed`` and ``labels`` into a fresh 64-bit seed."""
    h = hashlib.sha256(str(int(seed) & SEED_MASK).encode("ascii"))
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def make_rng(seed: int, *labels) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *labels))


def draw_seed(rng: Optional[np.random.Generator]) -> int:
    """Pull a base seed out of a generator (seed 0 when none is given)."""
    if rng is None:
        return 0
    return int(rng.integers(0, 1 << 63))


def instance_digest(G) -> str:
    """SHA-256 of the canonical ``.hgr`` text of ``G``."""
    from hypercut.graph_loader import write_hgr

    return hashlib.sha256(write_hgr(G).encode("utf-8")).hexdigest()


def block_digest(block) -> str:
    text = ",".join(str(v) for v in sorted(block))
    return hashlib.sha256(text.encode("ascii")).hexdigest()[:16]
