"""Chained-equation imputation.

Each round re-fits one model per incomplete column on the rows where that
column was originally observed, using the current (partially imputed) values
of every other usable column, then overwrites only the originally-missing
cells. Numeric targets use ordinary least squares; categorical targets a
nearest-centroid classifier. Both are deterministic, so the seed only tags
the run configuration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import AllMissingColumn
from ..tabular import MISSING, Column, Dataset, VariableType
from .missing import ImputeStrategy, impute_simple, mode_first_seen


@dataclass(frozen=True)
class MiceConfig:
    iterations: int = 10
    seed: int = 0

    def to_dict(self) -> dict:
        return {"iterations": self.iterations, "seed": self.seed}


def _usable(col: Column) -> bool:
    return col.vtype.is_numeric or col.vtype.is_categorical


def _encode(col: Column, cells, code_map) -> np.ndarray:
    if col.vtype.is_numeric:
        return np.array([float(c) for c in cells])
    return np.array([float(code_map[c]) for c in cells])


def impute_mice(d: Dataset, config: MiceConfig | None = None) -> Dataset:
    """Fill every MISSING cell; see module docstring for the procedure."""
    config = config or MiceConfig()
    if d.column_count < 2:
        raise ValueError("chained imputation needs at least 2 columns")
    for col in d.columns:
        if col.missing_count == len(col.cells) and len(col.cells) > 0:
            raise AllMissingColumn(f"column {col.name!r} has no observed values")
    if d.row_count == 0:
        return d

    missing_rows = {c.name: np.flatnonzero(c.missing_mask) for c in d.columns}
    if not any(len(v) for v in missing_rows.values()):
        return d

    # Initial fill: mean for numeric, mode for everything else.
    current: dict[str, list] = {}
    code_maps: dict[str, dict] = {}
    for col in d.columns:
        strategy = ImputeStrategy.MEAN if col.vtype.is_numeric else ImputeStrategy.MODE
        filled, _ = impute_simple(col, strategy)
        current[col.name] = list(filled.cells)
        if col.vtype.is_categorical:
            code_maps[col.name] = {v: i for i, v in enumerate(col.distinct())}

    usable = [c for c in d.columns if _usable(c)]
    targets = [c for c in usable if len(missing_rows[c.name])]

    for _ in range(config.iterations):
        for col in targets:
            predictors = [p for p in usable if p.name != col.name]
            if not predictors:
                continue
            X = np.column_stack(
                [_encode(p, current[p.name], code_maps.get(p.name)) for p in predictors]
            )
            X = np.column_stack([np.ones(len(X)), X])
            observed = np.ones(d.row_count, dtype=bool)
            observed[missing_rows[col.name]] = False
            holes = missing_rows[col.name]
            if col.vtype.is_numeric:
                y = np.array([float(v) for v in current[col.name]])
                beta, *_ = np.linalg.lstsq(X[observed], y[observed], rcond=None)
                predictions = X[holes] @ beta
                for row, value in zip(holes, predictions):
                    current[col.name][row] = float(value)
            else:
                classes = list(
                    dict.fromkeys(
                        d.columns[d.column_index(col.name)].cells[i]
                        for i in np.flatnonzero(observed)
                    )
                )
                centroids = []
                for cls in classes:
                    rows = [
                        i
                        for i in np.flatnonzero(observed)
                        if current[col.name][i] == cls
                    ]
                    centroids.append(X[rows].mean(axis=0))
                centroids = np.array(centroids)
                for row in holes:
                    dist = ((centroids - X[row]) ** 2).sum(axis=1)
                    current[col.name][row] = classes[int(np.argmin(dist))]

    columns = []
    for col in d.columns:
        cells = current[col.name]
        assert all(c is not MISSING for c in cells)
        columns.append(col.replace_cells(cells))
    return Dataset(name=d.name, columns=tuple(columns))
