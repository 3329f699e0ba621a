import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
import pandas as pd

from ..exceptions import SchemaMismatch
from ..namespaces import files_ns

BAND = tuple[float, float]


def _clean(value):
    """JSON-safe copy: numpy scalars to python, non-finite floats to None"""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_clean(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def check_bands(
    values: dict[str, float], bands: dict[str, BAND], soft: tuple[str, ...] = ()
) -> tuple[bool, list[str]]:
    """
    Compares values against closed tolerance bands.

    Returns whether every hard band holds, and a note per violated band.
    Missing or NaN values violate their band. Soft bands only add a note.
    """
    passed = True
    notes = []
    for name, (low, high) in bands.items():
        value = values.get(name, float("nan"))
        if value is not None and low <= value <= high:
            continue
        if name in soft:
            notes.append(f"warning: {name}={value} outside [{low}, {high}]")
        else:
            passed = False
            notes.append(f"{name}={value} outside [{low}, {high}]")
    return passed, notes


@dataclass
class StatReport:
    """Outcome of one experiment: measured values, bands and provenance"""

    estimator: str
    n: int
    replicates: int
    seeds: list[int]
    params: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    slope: Optional[float] = None
    stderr: Optional[float] = None
    passed: bool = True
    notes: list[str] = field(default_factory=list)
    schema_version: int = files_ns.SCHEMA_VERSION

    def evaluate(self, soft: tuple[str, ...] = ()) -> "StatReport":
        """Sets passed from the tolerance bands and records violations"""
        passed, notes = check_bands(self.values, self.tolerances, soft)
        self.passed = self.passed and passed
        self.notes.extend(notes)
        return self

    def fail(self, note: str) -> "StatReport":
        self.passed = False
        self.notes.append(note)
        return self

    def to_dict(self) -> dict:
        data = _clean(asdict(self))
        data["pass"] = data.pop("passed")
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False)

    @classmethod
    def from_dict(cls, data: dict) -> "StatReport":
        version = data.get("schema_version")
        if version != files_ns.SCHEMA_VERSION:
            raise SchemaMismatch(
                f"report schema {version} differs from {files_ns.SCHEMA_VERSION}"
            )
        data = dict(data)
        data["passed"] = data.pop("pass")
        # infinite band ends were written as null
        data["tolerances"] = {
            k: (-np.inf if low is None else low, np.inf if high is None else high)
            for k, (low, high) in data.get("tolerances", {}).items()
        }
        try:
            return cls(**data)
        except TypeError as error:
            raise SchemaMismatch(f"report fields do not match: {error}") from error

    @classmethod
    def from_json(cls, text: str) -> "StatReport":
        return cls.from_dict(json.loads(text))

    def to_frame(self) -> pd.DataFrame:
        """One row: provenance, every value and its band"""
        row = {
            "estimator": self.estimator,
            "n": self.n,
            "replicates": self.replicates,
            "slope": self.slope,
            "stderr": self.stderr,
            "pass": self.passed,
        }
        for name, value in self.values.items():
            row[f"value.{name}"] = value
        for name, (low, high) in self.tolerances.items():
            row[f"low.{name}"] = low
            row[f"high.{name}"] = high
        return pd.DataFrame([row])
