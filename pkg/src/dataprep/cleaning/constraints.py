"""Column constraints and their validation.

An empty violation list from validate_constraints is the executable form of
"the repaired dataset satisfies the constraint set". Missing cells violate
only NotNull; Range and DomainMembership apply to observed cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnknownColumn
from ..tabular import MISSING, Dataset


@dataclass(frozen=True)
class NotNull:
    column: str

    def to_dict(self) -> dict:
        return {"kind": "not_null", "column": self.column}


@dataclass(frozen=True)
class Range:
    column: str
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"Range lo {self.lo} > hi {self.hi}")

    def to_dict(self) -> dict:
        return {"kind": "range", "column": self.column, "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class Unique:
    columns: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))

    def to_dict(self) -> dict:
        return {"kind": "unique", "columns": list(self.columns)}


@dataclass(frozen=True)
class DomainMembership:
    column: str
    allowed: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "allowed", frozenset(self.allowed))

    def to_dict(self) -> dict:
        return {"kind": "domain", "column": self.column, "allowed": sorted(self.allowed)}


Constraint = NotNull | Range | Unique | DomainMembership


def constraint_from_dict(d: dict) -> Constraint:
    kind = d["kind"]
    if kind == "not_null":
        return NotNull(column=d["column"])
    if kind == "range":
        return Range(column=d["column"], lo=d["lo"], hi=d["hi"])
    if kind == "unique":
        return Unique(columns=tuple(d["columns"]))
    if kind == "domain":
        return DomainMembership(column=d["column"], allowed=frozenset(d["allowed"]))
    raise ValueError(f"unknown constraint kind {kind!r}")


@dataclass(frozen=True)
class Violation:
    constraint: Constraint
    rows: tuple[int, ...]
    message: str

    def to_dict(self) -> dict:
        return {
            "constraint": self.constraint.to_dict(),
            "rows": list(self.rows),
            "message": self.message,
        }


@dataclass(frozen=True)
class ConstraintSet:
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))

    def __len__(self) -> int:
        return len(self.constraints)

    def to_dict(self) -> dict:
        return {"version": 1, "constraints": [c.to_dict() for c in self.constraints]}

    @classmethod
    def from_dict(cls, d: dict) -> "ConstraintSet":
        return cls(constraints=tuple(constraint_from_dict(c) for c in d["constraints"]))

    def referenced_columns(self) -> list[str]:
        out: list[str] = []
        for c in self.constraints:
            if isinstance(c, Unique):
                out.extend(c.columns)
            else:
                out.append(c.column)
        return out


def _check_columns_exist(d: Dataset, constraints: ConstraintSet):
    for name in constraints.referenced_columns():
        if not d.has_column(name):
            raise UnknownColumn(f"constraint references unknown column {name!r}")


def validate_constraints(d: Dataset, constraints: ConstraintSet) -> list[Violation]:
    """Check every constraint; an empty list means the dataset satisfies all."""
    _check_columns_exist(d, constraints)
    violations: list[Violation] = []
    for constraint in constraints.constraints:
        if isinstance(constraint, NotNull):
            col = d.column(constraint.column)
            rows = tuple(i for i, c in enumerate(col.cells) if c is MISSING)
            if rows:
                violations.append(
                    Violation(constraint, rows, f"{constraint.column!r} has {len(rows)} null cell(s)")
                )
        elif isinstance(constraint, Range):
            col = d.column(constraint.column)
            rows = tuple(
                i
                for i, c in enumerate(col.cells)
                if c is not MISSING
                and isinstance(c, float)
                and not constraint.lo <= c <= constraint.hi
            )
            if rows:
                violations.append(
                    Violation(
                        constraint,
                        rows,
                        f"{constraint.column!r} outside [{constraint.lo}, {constraint.hi}] "
                        f"in {len(rows)} row(s)",
                    )
                )
        elif isinstance(constraint, Unique):
            cols = [d.column(n) for n in constraint.columns]
            seen: dict[tuple, list[int]] = {}
            for i in range(d.row_count):
                key = tuple(c.cells[i] for c in cols)
                seen.setdefault(key, []).append(i)
            dupes: list[int] = []
            for rows in seen.values():
                if len(rows) > 1:
                    dupes.extend(rows)
            if dupes:
                violations.append(
                    Violation(
                        constraint,
                        tuple(sorted(dupes)),
                        f"unique{constraint.columns!r} duplicated in {len(dupes)} row(s)",
                    )
                )
        elif isinstance(constraint, DomainMembership):
            col = d.column(constraint.column)
            rows = tuple(
                i
                for i, c in enumerate(col.cells)
                if c is not MISSING and str(c) not in constraint.allowed
            )
            if rows:
                violations.append(
                    Violation(
                        constraint,
                        rows,
                        f"{constraint.column!r} outside domain in {len(rows)} row(s)",
                    )
                )
    return violations
