"""
hypercut Configuration
======================
Solver limits and repetition constants.

Sources, later ones winning:
- model defaults
- an optional TOML file with a ``[hypercut]`` table
- the ``HYPERCUT_THREADS`` environment variable
- explicit keyword overrides
"""

import os
from typing import Any, Optional

import toml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hypercut.errors import BadParams


# --- Constants ---

THREADS_ENV = "HYPERCUT_THREADS"
CONFIG_TABLE = "hypercut"


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


class SolverConfig(BaseModel):
    """Tunable constants shared by every solver."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    oracle_limit: int = Field(18, ge=2, le=26)
    exact_limit: int = Field(14, ge=2, le=20)
    repetitions: int = Field(3, ge=1)
    exhaustive_limit: int = Field(4, ge=1)
    local_passes: int = Field(20, ge=0)
    power_iterations: int = Field(200, ge=1)
    threads: int = Field(default_factory=_default_threads, ge=1)
    # Largest p the local search hands straight to slow_min_cut; None uses its mark cap.
    search_floor: Optional[int] = Field(None, ge=0)


DEFAULT_CONFIG = SolverConfig()


# --- Public API ---

def load_config(path: Optional[str] = None, **overrides: Any) -> SolverConfig:
    """
    Build a SolverConfig from a TOML file, the environment and overrides.

    Args:
        path: Optional TOML file. Only its ``[hypercut]`` table is read.
        **overrides: Field values that win over every other source.

    Returns:
        A validated, frozen SolverConfig.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        BadParams: If a value is out of range or a key is unknown.
    """
    values: dict = {}

    if path is not None:
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Config file not found at: {path}")
        try:
            parsed = toml.load(path)
        except toml.TomlDecodeError as e:
            raise BadParams(f"Config file {path} is not valid TOML: {e}") from e
        table = parsed.get(CONFIG_TABLE, {})
        if not isinstance(table, dict):
            raise BadParams(f"[{CONFIG_TABLE}] in {path} must be a table.")
        values.update(table)

    raw_threads = os.environ.get(THREADS_ENV)
    if raw_threads:
        try:
            values["threads"] = int(raw_threads)
        except ValueError as e:
            raise BadParams(
                f"{THREADS_ENV} must be an integer, got '{raw_threads}'."
            ) from e

    values.update({k: v for k, v in overrides.items() if v is not None})

    try:
        return SolverConfig(**values)
    except ValidationError as e:
        raise BadParams(f"Invalid solver configuration: {e}") from e


def resolve(config: Optional[SolverConfig]) -> SolverConfig:
    return DEFAULT_CONFIG if config is None else config
