"""Plan steps: the replayable unit of every transformation."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum


class StepOrigin(str, Enum):
    RECOMMENDED = "recommended"
    USER_ACCEPTED = "user_accepted"
    USER_EDITED = "user_edited"
    PROPAGATED = "propagated"


#: operation ids the executor understands
OPS = (
    "profile",
    "drop_rows_by_missing",
    "impute",
    "impute_mice",
    "winsorize",
    "remove_outliers",
    "drop_rows",
    "dedupe",
    "label_encode",
    "one_hot_encode",
    "frequency_encode",
    "zscore",
    "minmax",
    "boxcox",
    "power",
    "discretize",
    "enforce_constraints",
)


@dataclass(frozen=True)
class StepRecord:
    id: str
    op: str
    params: dict = field(default_factory=dict)
    columns: tuple[str, ...] = ()
    origin: StepOrigin = StepOrigin.RECOMMENDED
    result: dict | None = None
    provenance: dict | None = None

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown operation {self.op!r}")
        object.__setattr__(self, "columns", tuple(self.columns))

    def with_result(self, result: dict) -> "StepRecord":
        return replace(self, result=result)

    def edited(self, params: dict) -> "StepRecord":
        return replace(self, params=params, origin=StepOrigin.USER_EDITED, result=None)

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "op": self.op,
            "params": self.params,
            "columns": list(self.columns),
            "origin": self.origin.value,
        }
        if self.result is not None:
            out["result"] = self.result
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "StepRecord":
        return cls(
            id=d["id"],
            op=d["op"],
            params=d.get("params", {}),
            columns=tuple(d.get("columns", ())),
            origin=StepOrigin(d.get("origin", "recommended")),
            result=d.get("result"),
            provenance=d.get("provenance"),
        )
