"""
hypercut Result Writer
======================
JSON serialisation of solver results and reports.
Keys are sorted so repeated runs produce byte-identical output.
"""

import json
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from hypercut.core import Cut
from hypercut.errors import BadParams
from hypercut.graph_loader import write_text_atomic
from hypercut.validation import validate_side

ParamValue = Union[int, float, str, bool, None]


class ResultRecord(BaseModel):
    """One min-cut answer, as emitted by ``hypercut mincut --json``."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    algorithm: str
    lambda_: int = Field(alias="lambda", ge=0)
    side: List[int]
    n: int = Field(ge=2)
    seed: Optional[int] = Field(default=None, ge=0, lt=1 << 64)
    wall_ms: float = Field(default=0.0, ge=0)
    params: Dict[str, ParamValue] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _side_is_proper(self) -> "ResultRecord":
        validate_side(self.side, self.n)
        if self.side != sorted(set(self.side)):
            raise ValueError("side must be sorted and duplicate-free.")
        return self

    @classmethod
    def from_cut(
        cls,
        cut: Cut,
        n: int,
        seed: Optional[int] = None,
        wall_ms: float = 0.0,
        params: Optional[Dict[str, ParamValue]] = None,
        algorithm: Optional[str] = None,
    ) -> "ResultRecord":
        try:
            return cls(
                algorithm=algorithm or cut.source,
                **{"lambda": cut.capacity},
                side=cut.sorted_side(),
                n=n,
                seed=seed,
                wall_ms=wall_ms,
                params=dict(params or {}),
            )
        except ValidationError as e:
            raise BadParams(f"Invalid result record: {e}") from e

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)


# --- Public API ---

def dumps(data: Dict[str, Any]) -> str:
    """Sorted-key, indented JSON with a trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_result(record: ResultRecord) -> str:
    return dumps(record.to_dict())


def write_result_file(record: ResultRecord, path: str) -> str:
    """Write the record atomically; returns the absolute path."""
    return write_text_atomic(write_result(record), path, prefix="result_")


def write_report_file(report: Dict[str, Any], path: str) -> str:
    return write_text_atomic(dumps(report), path, prefix="report_")
