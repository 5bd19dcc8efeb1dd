"""Immutable columnar Dataset / Column values.

Every operation in the engine returns a new Dataset; columns are shared
between datasets wherever unchanged, which keeps undo/replay cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..errors import IndexOutOfRange, UnknownColumn
from .cells import MISSING, Cell, VariableType, is_missing


@dataclass(frozen=True)
class Column:
    """One named attribute: a variable type plus a tuple of cells."""

    name: str
    vtype: VariableType
    cells: tuple[Cell, ...]
    ordinal_order: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if self.ordinal_order is not None:
            object.__setattr__(self, "ordinal_order", tuple(self.ordinal_order))
        self._check_cells()

    def _check_cells(self):
        if self.vtype.is_numeric:
            for c in self.cells:
                if c is MISSING:
                    continue
                if not isinstance(c, (int, float)) or isinstance(c, bool):
                    raise TypeError(f"column {self.name!r}: non-numeric cell {c!r}")
                if math.isnan(c) or math.isinf(c):
                    raise ValueError(f"column {self.name!r}: non-finite cell {c!r}")
        else:
            for c in self.cells:
                if c is not MISSING and not isinstance(c, str):
                    raise TypeError(f"column {self.name!r}: non-text cell {c!r}")
        if self.vtype is VariableType.ORDINAL:
            order = set(self.ordinal_order or ())
            observed = {c for c in self.cells if c is not MISSING}
            if not observed <= order:
                raise ValueError(
                    f"column {self.name!r}: ordinal order misses "
                    f"{sorted(observed - order)!r}"
                )

    def __len__(self) -> int:
        return len(self.cells)

    @cached_property
    def missing_mask(self) -> np.ndarray:
        return np.fromiter((c is MISSING for c in self.cells), dtype=bool, count=len(self.cells))

    @property
    def missing_count(self) -> int:
        return int(self.missing_mask.sum())

    def non_missing(self) -> list[Cell]:
        return [c for c in self.cells if c is not MISSING]

    @cached_property
    def _float_array(self) -> np.ndarray:
        if not self.vtype.is_numeric:
            raise TypeError(f"column {self.name!r} is {self.vtype.value}, not numeric")
        out = np.empty(len(self.cells), dtype=np.float64)
        for i, c in enumerate(self.cells):
            out[i] = np.nan if c is MISSING else c
        out.setflags(write=False)
        return out

    def to_numpy(self) -> np.ndarray:
        """Numeric column as float64, missing as NaN (boundary use only)."""
        return self._float_array

    def observed_values(self) -> np.ndarray:
        """Non-missing numeric values as a float array."""
        arr = self.to_numpy()
        return arr[~np.isnan(arr)]

    def distinct(self) -> list[Cell]:
        """Distinct non-missing values in first-seen order."""
        seen: dict[Cell, None] = {}
        for c in self.cells:
            if c is not MISSING and c not in seen:
                seen[c] = None
        return list(seen)

    def replace_cells(self, cells: Sequence[Cell]) -> "Column":
        return replace(self, cells=tuple(cells))


@dataclass(frozen=True)
class Dataset:
    """Named, rectangular, immutable collection of columns."""

    name: str
    columns: tuple[Column, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate column names: {dupes}")
        lengths = {len(c) for c in self.columns}
        if len(lengths) > 1:
            raise ValueError(f"ragged columns: lengths {sorted(lengths)}")

    @property
    def row_count(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def column_count(self) -> int:
        return len(self.columns)

    @property
    def column_names(self) -> list[str]:
        return [c.name for c in self.columns]

    def has_column(self, name: str) -> bool:
        return any(c.name == name for c in self.columns)

    def column(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise UnknownColumn(f"no column named {name!r}")

    def column_index(self, name: str) -> int:
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i
        raise UnknownColumn(f"no column named {name!r}")

    def row(self, i: int) -> tuple[Cell, ...]:
        if not 0 <= i < self.row_count:
            raise IndexOutOfRange(f"row {i} outside 0..{self.row_count - 1}")
        return tuple(c.cells[i] for c in self.columns)

    def iter_rows(self) -> Iterator[tuple[Cell, ...]]:
        for i in range(self.row_count):
            yield tuple(c.cells[i] for c in self.columns)

    def numeric_columns(self) -> list[Column]:
        return [c for c in self.columns if c.vtype is VariableType.CONTINUOUS]

    def categorical_columns(self) -> list[Column]:
        return [c for c in self.columns if c.vtype.is_categorical]

    # --- pure transformations -------------------------------------------

    def select_columns(self, names: Sequence[str]) -> "Dataset":
        """New dataset view restricted to `names`, in the given order."""
        cols = [self.column(n) for n in names]
        return Dataset(name=self.name, columns=tuple(cols))

    def drop_rows(self, row_ids: Iterable[int]) -> tuple["Dataset", int]:
        """Remove rows by index; remaining order preserved.

        Returns the new dataset and the number of rows removed.
        """
        ids = set(row_ids)
        for i in ids:
            if not 0 <= i < self.row_count:
                raise IndexOutOfRange(f"row {i} outside 0..{self.row_count - 1}")
        if not ids:
            return self, 0
        keep = [i for i in range(self.row_count) if i not in ids]
        cols = tuple(
            c.replace_cells([c.cells[i] for i in keep]) for c in self.columns
        )
        return Dataset(name=self.name, columns=cols), len(ids)

    def replace_column(self, name: str, new: Column) -> "Dataset":
        idx = self.column_index(name)
        cols = list(self.columns)
        cols[idx] = new
        return Dataset(name=self.name, columns=tuple(cols))

    def replace_column_with(self, name: str, news: Sequence[Column]) -> "Dataset":
        """Replace one column by several (used by one-hot expansion)."""
        idx = self.column_index(name)
        cols = list(self.columns)
        cols[idx : idx + 1] = list(news)
        return Dataset(name=self.name, columns=tuple(cols))

    def add_column(self, new: Column) -> "Dataset":
        return Dataset(name=self.name, columns=self.columns + (new,))

    def drop_column(self, name: str) -> "Dataset":
        idx = self.column_index(name)
        cols = list(self.columns)
        del cols[idx]
        return Dataset(name=self.name, columns=tuple(cols))


def select_columns(d: Dataset, names: Sequence[str]) -> Dataset:
    return d.select_columns(names)


def drop_rows(d: Dataset, row_ids: Iterable[int]) -> tuple[Dataset, int]:
    return d.drop_rows(row_ids)
