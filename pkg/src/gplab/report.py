"""Versioned JSON reports and their schema."""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field

import jsonschema

SCHEMA_ID = "gp-lab-report/1"
VERDICTS = ("pass", "fail", "inconclusive")

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "suite", "environment", "checks", "summary"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "suite": {"type": "string"},
        "environment": {
            "type": "object",
            "required": ["window", "seed", "bounds"],
            "properties": {
                "window": {"type": "integer", "minimum": 0},
                "seed": {"type": "integer"},
                "bounds": {"type": "object"},
            },
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "params", "verdict", "witness", "wall_time"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "params": {"type": "object"},
                    "verdict": {"enum": list(VERDICTS)},
                    "witness": {},
                    "wall_time": {"type": "number", "minimum": 0},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": list(VERDICTS),
            "properties": {v: {"type": "integer", "minimum": 0} for v in VERDICTS},
        },
    },
}


@dataclass
class CheckRecord:
    id: str
    params: dict
    verdict: str
    witness: object = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass
class SuiteReport:
    suite: str
    environment: dict
    checks: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {v: 0 for v in VERDICTS}
        for c in self.checks:
            counts[c.verdict] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(c.verdict == "fail" for c in self.checks)

    def to_json(self) -> dict:
        doc = {
            "schema": SCHEMA_ID,
            "suite": self.suite,
            "environment": self.environment,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary,
        }
        validate(doc)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"suite {self.suite}  window={self.environment.get('window')} seed={self.environment.get('seed')}"]
        for c in self.checks:
            lines.append(f"  {c.verdict:<12} {c.id}  ({c.wall_time:.2f}s)")
        s = self.summary
        lines.append(f"  {s['pass']} pass, {s['fail']} fail, {s['inconclusive']} inconclusive")
        return "\n".join(lines)


def validate(doc: dict) -> None:
    jsonschema.validate(doc, SCHEMA)


def strip_timing(doc: dict) -> dict:
    """Copy of a report without wall times, for determinism comparisons."""
    out = copy.deepcopy(doc)
    for c in out.get("checks", []):
        c.pop("wall_time", None)
    return out


def to_jsonable(obj):
    """Turn witnesses (dataclasses with to_json, tuples, Fractions) into JSON values."""
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)
