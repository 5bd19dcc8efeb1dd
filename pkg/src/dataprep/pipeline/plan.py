"""Cleaning plans: versioned, replayable JSON documents.

A plan binds an ordered step list to the fingerprint of the exact input file
it was built for; replaying it on that file reproduces outputs byte-for-byte.
The schema is documented in docs/formats.md.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .. import __version__ as ENGINE_VERSION
from ..cleaning import ConstraintSet
from ..errors import IoError
from ..tabular import ParseOptions
from .steps import StepRecord

PLAN_FORMAT_VERSION = 1


@dataclass(frozen=True)
class CleaningPlan:
    fingerprint: str
    seed: int = 0
    source_name: str = "dataset"
    engine_version: str = ENGINE_VERSION
    parse_options: ParseOptions = field(default_factory=ParseOptions)
    constraints: ConstraintSet = field(default_factory=ConstraintSet)
    steps: tuple[StepRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        ids = [s.id for s in self.steps]
        if len(set(ids)) != len(ids):
            raise ValueError("step ids must be unique")

    def step(self, step_id: str) -> StepRecord:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def with_steps(self, steps) -> "CleaningPlan":
        return replace(self, steps=tuple(steps))

    def to_dict(self) -> dict:
        return {
            "format": "dataprep-plan",
            "version": PLAN_FORMAT_VERSION,
            "engine_version": self.engine_version,
            "fingerprint": self.fingerprint,
            "seed": self.seed,
            "source_name": self.source_name,
            "parse_options": self.parse_options.to_dict(),
            "constraints": self.constraints.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "CleaningPlan":
        if d.get("format") != "dataprep-plan":
            raise ValueError("not a dataprep plan document")
        return cls(
            fingerprint=d["fingerprint"],
            seed=d.get("seed", 0),
            source_name=d.get("source_name", "dataset"),
            engine_version=d.get("engine_version", ENGINE_VERSION),
            parse_options=ParseOptions.from_dict(d.get("parse_options", {})),
            constraints=ConstraintSet.from_dict(
                d.get("constraints", {"constraints": []})
            ),
            steps=tuple(StepRecord.from_dict(s) for s in d.get("steps", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "CleaningPlan":
        return cls.from_dict(json.loads(text))

    def save(self, path):
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(self.to_json())
        except OSError as exc:
            raise IoError(f"cannot write plan to {path}: {exc}") from exc

    @classmethod
    def load(cls, path) -> "CleaningPlan":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return cls.from_json(fh.read())
        except OSError as exc:
            raise IoError(f"cannot read plan from {path}: {exc}") from exc
