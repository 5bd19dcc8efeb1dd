"""Categorical encoders: label, one-hot, frequency."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CardinalityTooHigh, IncompleteOrder, NonCategorical
from ..tabular import MISSING, Column, VariableType

ONE_HOT_CAP = 50


@dataclass(frozen=True)
class EncodingMap:
    kind: str  # "label" | "one_hot" | "frequency"
    column: str
    mapping: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, "column": self.column, "mapping": dict(self.mapping)}

    @classmethod
    def from_dict(cls, d: dict) -> "EncodingMap":
        return cls(kind=d["kind"], column=d["column"], mapping=dict(d["mapping"]))


def _require_categorical(c: Column, op: str):
    if not c.vtype.is_categorical:
        raise NonCategorical(f"{op} needs a categorical column, {c.name!r} is {c.vtype.value}")


def label_encode(c: Column, order: list[str] | None = None) -> tuple[Column, EncodingMap]:
    """Codes 0..K-1 following `order`, the column's ordinal order, or
    first-seen order; MISSING stays MISSING."""
    _require_categorical(c, "label encoding")
    observed = c.distinct()
    if order is None:
        order = list(c.ordinal_order) if c.ordinal_order else observed
    missing_from_order = [v for v in observed if v not in set(order)]
    if missing_from_order:
        raise IncompleteOrder(f"order misses categories {missing_from_order!r}")
    mapping = {cat: float(i) for i, cat in enumerate(order)}
    cells = tuple(
        MISSING if cell is MISSING else mapping[cell] for cell in c.cells
    )
    out = Column(name=c.name, vtype=VariableType.CONTINUOUS, cells=cells)
    return out, EncodingMap(kind="label", column=c.name, mapping=mapping)


def label_decode(c: Column, enc: EncodingMap) -> Column:
    reverse = {v: k for k, v in enc.mapping.items()}
    cells = tuple(MISSING if cell is MISSING else reverse[cell] for cell in c.cells)
    return Column(name=enc.column, vtype=VariableType.NOMINAL, cells=cells)


def one_hot_encode(c: Column, cap: int = ONE_HOT_CAP) -> tuple[list[Column], EncodingMap]:
    """K indicator columns named "<col>=<category>"; a missing source row is
    missing across every indicator."""
    _require_categorical(c, "one-hot encoding")
    categories = c.distinct()
    if len(categories) > cap:
        raise CardinalityTooHigh(
            f"{c.name!r} has {len(categories)} categories, one-hot cap is {cap}"
        )
    mapping = {cat: f"{c.name}={cat}" for cat in categories}
    columns = []
    for cat in categories:
        cells = tuple(
            MISSING if cell is MISSING else (1.0 if cell == cat else 0.0)
            for cell in c.cells
        )
        columns.append(Column(name=mapping[cat], vtype=VariableType.CONTINUOUS, cells=cells))
    return columns, EncodingMap(kind="one_hot", column=c.name, mapping=mapping)


def frequency_encode(c: Column) -> tuple[Column, EncodingMap]:
    """Each category becomes its relative frequency among observed cells."""
    _require_categorical(c, "frequency encoding")
    counts: dict[str, int] = {}
    total = 0
    for cell in c.cells:
        if cell is not MISSING:
            counts[cell] = counts.get(cell, 0) + 1
            total += 1
    mapping = {cat: count / total for cat, count in counts.items()}
    cells = tuple(MISSING if cell is MISSING else mapping[cell] for cell in c.cells)
    out = Column(name=c.name, vtype=VariableType.CONTINUOUS, cells=cells)
    return out, EncodingMap(kind="frequency", column=c.name, mapping=mapping)
