"""Missing-cell detection, row dropping, and simple imputation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import AllMissing, StrategyTypeMismatch
from ..tabular import MISSING, Cell, Column, Dataset


@dataclass(frozen=True)
class MissingReport:
    by_column: dict[str, tuple[int, ...]]
    row_counts: tuple[int, ...]
    row_fractions: tuple[float, ...]

    @property
    def total_missing(self) -> int:
        return sum(len(v) for v in self.by_column.values())

    def to_dict(self) -> dict:
        return {
            "by_column": {k: list(v) for k, v in self.by_column.items()},
            "row_counts": list(self.row_counts),
            "row_fractions": list(self.row_fractions),
        }


def find_missing(d: Dataset) -> MissingReport:
    """Exhaustive index of MISSING cells, by column and by row."""
    by_column: dict[str, tuple[int, ...]] = {}
    row_counts = np.zeros(d.row_count, dtype=int)
    for col in d.columns:
        idx = np.flatnonzero(col.missing_mask)
        if len(idx):
            by_column[col.name] = tuple(int(i) for i in idx)
            row_counts[idx] += 1
    n_cols = max(d.column_count, 1)
    fractions = tuple(float(c) / n_cols for c in row_counts)
    return MissingReport(
        by_column=by_column,
        row_counts=tuple(int(c) for c in row_counts),
        row_fractions=fractions,
    )


def drop_rows_by_missing(
    d: Dataset, threshold: float = 0.5
) -> tuple[Dataset, tuple[int, ...]]:
    """Drop rows whose missing fraction strictly exceeds `threshold`."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    report = find_missing(d)
    doomed = tuple(
        i for i, frac in enumerate(report.row_fractions) if frac > threshold
    )
    out, _ = d.drop_rows(doomed)
    return out, doomed


class ImputeStrategy(str, Enum):
    MEAN = "mean"
    MEDIAN = "median"
    MODE = "mode"


def mode_first_seen(cells) -> Cell:
    counts: dict[Cell, int] = {}
    for c in cells:
        if c is not MISSING:
            counts[c] = counts.get(c, 0) + 1
    if not counts:
        raise AllMissing("no observed values")
    best = max(counts.values())
    return next(c for c, k in counts.items() if k == best)


def impute_simple(c: Column, strategy: ImputeStrategy) -> tuple[Column, Cell]:
    """Fill MISSING with the column statistic; returns (column, fill value)."""
    strategy = ImputeStrategy(strategy)
    if not any(cell is not MISSING for cell in c.cells):
        raise AllMissing(f"column {c.name!r} is entirely missing")
    if strategy in (ImputeStrategy.MEAN, ImputeStrategy.MEDIAN):
        if not c.vtype.is_numeric:
            raise StrategyTypeMismatch(
                f"{strategy.value} imputation needs a numeric column, "
                f"{c.name!r} is {c.vtype.value}"
            )
        observed = c.observed_values()
        fill: Cell = float(
            observed.mean() if strategy is ImputeStrategy.MEAN else np.median(observed)
        )
    else:
        fill = mode_first_seen(c.cells)
    cells = tuple(fill if cell is MISSING else cell for cell in c.cells)
    return c.replace_cells(cells), fill
