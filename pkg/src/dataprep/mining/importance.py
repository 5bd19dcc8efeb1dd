"""Feature-importance ranking via a from-scratch random forest."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConstantTarget, NoPredictors
from ..ml import RandomForest
from ..tabular import MISSING, Column, Dataset, VariableType


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_leaf: int = 1
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ImportanceRanking:
    """Features with impurity-decrease scores, descending; scores sum to 1."""

    entries: tuple[tuple[str, float], ...]
    config: ForestConfig

    def to_dict(self) -> dict:
        return {
            "entries": [{"feature": n, "score": s} for n, s in self.entries],
            "config": self.config.to_dict(),
        }


def _encode_predictor(col: Column) -> np.ndarray | None:
    """Columns become float features; categorical cells get first-seen codes,
    missing numeric cells the observed median, missing categories -1."""
    if col.vtype.is_numeric:
        x = col.to_numpy().copy()
        nan = np.isnan(x)
        if nan.all():
            return None
        if nan.any():
            x[nan] = float(np.median(x[~nan]))
        return x
    if col.vtype.is_categorical:
        codes = {v: float(i) for i, v in enumerate(col.distinct())}
        return np.array(
            [codes[c] if c is not MISSING else -1.0 for c in col.cells]
        )
    return None  # free text is not a usable tabular feature


def rank_features(d: Dataset, target: str, config: ForestConfig | None = None) -> ImportanceRanking:
    config = config or ForestConfig()
    target_col = d.column(target)

    keep = [i for i in range(d.row_count) if target_col.cells[i] is not MISSING]
    features: list[tuple[str, np.ndarray]] = []
    for col in d.columns:
        if col.name == target:
            continue
        encoded = _encode_predictor(col)
        if encoded is not None:
            features.append((col.name, encoded[keep]))
    if not features:
        raise NoPredictors("no usable predictor columns")

    if target_col.vtype.is_numeric:
        y = target_col.to_numpy()[keep]
        criterion = "variance"
    else:
        cells = [target_col.cells[i] for i in keep]
        codes = {v: i for i, v in enumerate(dict.fromkeys(cells))}
        y = np.array([codes[c] for c in cells], dtype=np.int64)
        criterion = "gini"
    if len(set(y.tolist())) < 2:
        raise ConstantTarget(f"target {target!r} never varies")

    X = np.column_stack([x for _, x in features])
    forest = RandomForest(
        criterion=criterion,
        n_trees=config.n_trees,
        max_depth=config.max_depth,
        min_samples_leaf=config.min_samples_leaf,
        max_features="sqrt",
        random_state=config.seed,
    ).fit(X, y)

    scored = list(zip([n for n, _ in features], forest.feature_importances_))
    order = sorted(range(len(scored)), key=lambda i: (-scored[i][1], i))
    entries = tuple((scored[i][0], float(scored[i][1])) for i in order)
    return ImportanceRanking(entries=entries, config=config)
