"""Duplicate removal and inconsistency repair under a similarity model.

Two repairs per pass over candidate pairs (sorted-neighborhood blocking, or
exact all-pairs mode):

1. Inconsistency repair: within a near-duplicate pair (row distance <= rn),
   any attribute whose value distance is in (0, r1] is canonicalized to the
   column's more frequent variant (ties to the smaller value).
2. Duplicate removal: rows whose distance is <= rn collapse to the
   lowest-index representative (union-find).

Passes repeat until a fixpoint so the operation is idempotent. The merge log
records every substitution and removal against original row indices and can
replay the result from the original dataset.

Component distances at application time use the dataset's own column types
and numeric ranges; the model supplies weights and thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import UnknownAttribute
from ..tabular import MISSING, Cell, Column, Dataset
from .similarity import SimilarityModel, component_distance

BLOCKING_WINDOW = 10
MAX_PASSES = 10


@dataclass(frozen=True)
class Substitution:
    row: int  # original row index
    column: str
    old: Cell
    new: Cell
    distance: float

    def to_dict(self) -> dict:
        return {
            "kind": "substitution",
            "row": self.row,
            "column": self.column,
            "old": None if self.old is MISSING else self.old,
            "new": None if self.new is MISSING else self.new,
            "distance": self.distance,
        }


@dataclass(frozen=True)
class Removal:
    kept: int  # original row indices
    removed: int
    distance: float

    def to_dict(self) -> dict:
        return {
            "kind": "removal",
            "kept": self.kept,
            "removed": self.removed,
            "distance": self.distance,
        }


@dataclass
class MergeLog:
    records: list = field(default_factory=list)

    @property
    def substitutions(self) -> list[Substitution]:
        return [r for r in self.records if isinstance(r, Substitution)]

    @property
    def removals(self) -> list[Removal]:
        return [r for r in self.records if isinstance(r, Removal)]

    def to_dict(self) -> dict:
        return {"records": [r.to_dict() for r in self.records]}


def _candidate_pairs(
    cells: dict[str, list[Cell]], attrs, n: int, all_pairs: bool, window: int
) -> list[tuple[int, int]]:
    if all_pairs or n <= window:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs = set()
    for name in attrs:
        column = cells[name]
        order = sorted(range(n), key=lambda i: (column[i] is MISSING, str(column[i])))
        for pos in range(n):
            for off in range(1, window):
                if pos + off >= n:
                    break
                a, b = order[pos], order[pos + off]
                pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


def _scales(d: Dataset, attrs) -> dict[str, tuple[float, float] | None]:
    scales = {}
    for name in attrs:
        col = d.column(name)
        if col.vtype.is_numeric:
            x = col.observed_values()
            scales[name] = (float(x.min()), float(x.max())) if len(x) else None
        else:
            scales[name] = None
    return scales


def _canonical(counts: dict[Cell, int], a: Cell, b: Cell) -> Cell:
    """More frequent variant; ties take the smaller value."""
    ca, cb = counts.get(a, 0), counts.get(b, 0)
    if ca != cb:
        return a if ca > cb else b
    if isinstance(a, str) and isinstance(b, str):
        return min(a, b)
    return min(a, b, key=float)


def dedupe(
    d: Dataset,
    model: SimilarityModel,
    *,
    all_pairs: bool = False,
    window: int = BLOCKING_WINDOW,
) -> tuple[Dataset, MergeLog]:
    for name in model.attributes:
        if not d.has_column(name):
            raise UnknownAttribute(f"model attribute {name!r} not in dataset")

    if model.r1 == 0.0 and model.rn == 0.0:
        return _dedupe_exact(d, model)

    attrs = list(model.attributes)
    weight = dict(zip(model.attributes, model.weights))
    vtypes = {name: d.column(name).vtype for name in attrs}
    scales = _scales(d, attrs)

    cells: dict[str, list[Cell]] = {c.name: list(c.cells) for c in d.columns}
    original_ids = list(range(d.row_count))
    log = MergeLog()

    for _ in range(MAX_PASSES):
        n = len(original_ids)
        changed = False
        pairs = _candidate_pairs(cells, attrs, n, all_pairs, window)

        def row_distance(i: int, j: int) -> tuple[float, dict[str, float]]:
            per_attr = {}
            total = 0.0
            for name in attrs:
                dist = component_distance(
                    cells[name][i], cells[name][j], vtypes[name], scales[name]
                )
                per_attr[name] = dist
                total += weight[name] * dist
            return total, per_attr

        # Pass 1: canonicalize near-duplicate attribute variants.
        counts: dict[str, dict[Cell, int]] = {}
        for name in attrs:
            counter: dict[Cell, int] = {}
            for v in cells[name]:
                if v is not MISSING:
                    counter[v] = counter.get(v, 0) + 1
            counts[name] = counter
        for i, j in pairs:
            total, per_attr = row_distance(i, j)
            if total > model.rn:
                continue
            for name in attrs:
                dist = per_attr[name]
                if 0.0 < dist <= model.r1:
                    a, b = cells[name][i], cells[name][j]
                    if a is MISSING or b is MISSING:
                        continue
                    winner = _canonical(counts[name], a, b)
                    for row, old in ((i, a), (j, b)):
                        if old != winner:
                            cells[name][row] = winner
                            log.records.append(
                                Substitution(
                                    row=original_ids[row],
                                    column=name,
                                    old=old,
                                    new=winner,
                                    distance=dist,
                                )
                            )
                            changed = True

        # Pass 2: collapse duplicate rows (union-find, lowest index kept).
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merge_dist: dict[tuple[int, int], float] = {}
        for i, j in _candidate_pairs(cells, attrs, n, all_pairs, window):
            total, _ = row_distance(i, j)
            if total <= model.rn:
                ri, rj = find(i), find(j)
                if ri != rj:
                    lo, hi = min(ri, rj), max(ri, rj)
                    parent[hi] = lo
                merge_dist[(min(i, j), max(i, j))] = total

        keep, drop = [], []
        for i in range(n):
            (keep if find(i) == i else drop).append(i)
        if drop:
            changed = True
            for i in drop:
                root = find(i)
                dist = merge_dist.get((min(root, i), max(root, i)))
                if dist is None:
                    dist, _ = row_distance(root, i)
                log.records.append(
                    Removal(kept=original_ids[root], removed=original_ids[i], distance=dist)
                )
            for name in cells:
                cells[name] = [cells[name][i] for i in keep]
            original_ids = [original_ids[i] for i in keep]

        if not changed:
            break

    columns = tuple(
        Column(
            name=c.name,
            vtype=c.vtype,
            cells=tuple(cells[c.name]),
            ordinal_order=c.ordinal_order,
        )
        for c in d.columns
    )
    return Dataset(name=d.name, columns=columns), log


def _dedupe_exact(d: Dataset, model: SimilarityModel) -> tuple[Dataset, MergeLog]:
    """Zero-threshold models only match identical rows: one hash pass."""
    log = MergeLog()
    attrs = list(model.attributes)
    columns = [d.column(name) for name in attrs]
    seen: dict[tuple, int] = {}
    doomed: list[int] = []
    for i in range(d.row_count):
        # MISSING is a hashable singleton, never equal to a real value.
        key = tuple(c.cells[i] for c in columns)
        first = seen.setdefault(key, i)
        if first != i:
            doomed.append(i)
            log.records.append(Removal(kept=first, removed=i, distance=0.0))
    out, _ = d.drop_rows(doomed)
    return out, log


def replay_merge_log(d: Dataset, log: MergeLog) -> Dataset:
    """Re-apply a merge log to the original dataset it was produced from."""
    cells: dict[str, list[Cell]] = {c.name: list(c.cells) for c in d.columns}
    removed: set[int] = set()
    for record in log.records:
        if isinstance(record, Substitution):
            cells[record.column][record.row] = record.new
        else:
            removed.add(record.removed)
    keep = [i for i in range(d.row_count) if i not in removed]
    columns = tuple(
        Column(
            name=c.name,
            vtype=c.vtype,
            cells=tuple(cells[c.name][i] for i in keep),
            ordinal_order=c.ordinal_order,
        )
        for c in d.columns
    )
    return Dataset(name=d.name, columns=columns)
