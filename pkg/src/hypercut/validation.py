"""
hypercut Validation Module
==========================
Checks applied to values arriving from outside the library (CLI flags,
files, JSON) before they reach a solver.
"""

import os
import re
from typing import Iterable, List

from hypercut.errors import BadParams, EmptySide, VertexOutOfRange


# --- Constants ---

MAX_SEED = (1 << 64) - 1
MAX_LABEL_LENGTH = 64
LABEL_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")


# --- Scalars ---

def validate_seed(seed) -> int:
    """
    Accept an unsigned 64-bit seed.

    Raises:
        BadParams: If the seed is not an integer in [0, 2^64).
    """
    if isinstance(seed, bool):
        raise BadParams("Seed must be an integer, not a boolean.")
    try:
        value = int(seed)
    except (TypeError, ValueError):
        raise BadParams(f"Seed must be an integer, got {seed!r}.") from None
    if value < 0 or value > MAX_SEED:
        raise BadParams(f"Seed {value} is outside the unsigned 64-bit range.")
    return value


def validate_positive(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise BadParams(f"'{name}' must be a positive integer, got {value!r}.")
    return value


def validate_label(label: str) -> str:
    """Labels end up in file names, so keep them to a safe alphabet."""
    if not isinstance(label, str):
        raise BadParams("Label must be a string.")
    label = label.strip()
    if not label or len(label) > MAX_LABEL_LENGTH:
        raise BadParams(
            f"Label must have 1..{MAX_LABEL_LENGTH} characters, got {len(label)}."
        )
    if not LABEL_PATTERN.match(label):
        raise BadParams(f"Label '{label}' may only hold letters, digits, '_', '.', '-'.")
    return label


# --- Vertex sets ---

def validate_side(side: Iterable[int], n: int) -> List[int]:
    """
    Sorted side of a proper bipartition of [0, n).

    Raises:
        VertexOutOfRange: For ids outside [0, n).
        EmptySide: If the side is empty or all of [0, n).
    """
    values = sorted({int(v) for v in side})
    bad = [v for v in values if v < 0 or v >= n]
    if bad:
        raise VertexOutOfRange(f"Side mentions vertices {bad} outside [0,{n}).")
    if not values or len(values) >= n:
        raise EmptySide(f"Side must be non-empty and proper; got {len(values)} of {n}.")
    return values


# --- File paths ---

def check_output_path(path: str) -> str:
    """
    Resolve an output path and refuse to write onto a directory.

    Returns:
        Absolute normalised path.
    """
    if not isinstance(path, str) or not path.strip():
        raise BadParams("Output path must be a non-empty string.")
    if "\x00" in path:
        raise BadParams("Output path contains a null byte.")
    resolved = os.path.normpath(os.path.abspath(path))
    if os.path.isdir(resolved):
        raise BadParams(f"Output path '{path}' is a directory.")
    return resolved
