"""Multi-label preprocessing recommender: boosted trees per label field.

Each label field (missing handling, transformation, scaling, outlier flag)
gets an independent one-vs-rest ensemble of squared-loss boosted trees over
one-hot meta-features, so one prediction yields the full step tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DegenerateLabels
from ..ml import GradientBoostedRegressor
from .meta import INPUT_FIELDS, LABEL_FIELDS, PreprocMetaRow


@dataclass(frozen=True)
class GbmConfig:
    trees: int = 50
    depth: int = 3
    learning_rate: float = 0.1
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "trees": self.trees,
            "depth": self.depth,
            "learning_rate": self.learning_rate,
            "seed": self.seed,
        }


@dataclass
class _FieldModel:
    classes: list[str]
    ensembles: list[GradientBoostedRegressor] = field(default_factory=list)

    def predict(self, X: np.ndarray) -> list[str]:
        if len(self.classes) == 1:
            return [self.classes[0]] * len(X)
        scores = np.column_stack([e.predict(X) for e in self.ensembles])
        return [self.classes[int(i)] for i in np.argmax(scores, axis=1)]


@dataclass
class GbmModel:
    config: GbmConfig
    vocabulary: dict[str, list[str]] = field(default_factory=dict)
    fields: dict[str, _FieldModel] = field(default_factory=dict)
    loss_histories: dict[str, list[list[float]]] = field(default_factory=dict)

    def encode(self, inputs: dict[str, str]) -> np.ndarray:
        vec: list[float] = []
        for fname in INPUT_FIELDS:
            vocab = self.vocabulary[fname]
            value = inputs.get(fname, "unset")
            vec.extend(1.0 if value == v else 0.0 for v in vocab)
        return np.array(vec)

    def predict(self, inputs: dict[str, str]) -> dict[str, str]:
        X = self.encode(inputs).reshape(1, -1)
        return {fname: model.predict(X)[0] for fname, model in self.fields.items()}


def train_preproc_gbm(rows: list[PreprocMetaRow], config: GbmConfig | None = None) -> GbmModel:
    """Fit one ensemble per label field; 100% train accuracy is expected on
    distinct meta-feature rows."""
    if len(rows) < 2:
        raise DegenerateLabels("need at least 2 training rows")
    config = config or GbmConfig()

    vocabulary = {
        fname: sorted({r.inputs()[fname] for r in rows}) for fname in INPUT_FIELDS
    }
    model = GbmModel(config=config, vocabulary=vocabulary)
    X = np.array([model.encode(r.inputs()) for r in rows])

    for fname in LABEL_FIELDS:
        labels = [r.labels()[fname] for r in rows]
        classes = sorted(set(labels))
        fmodel = _FieldModel(classes=classes)
        histories: list[list[float]] = []
        if len(classes) > 1:
            for cls in classes:
                y = np.array([1.0 if lab == cls else 0.0 for lab in labels])
                gbr = GradientBoostedRegressor(
                    n_rounds=config.trees,
                    learning_rate=config.learning_rate,
                    max_depth=config.depth,
                ).fit(X, y)
                fmodel.ensembles.append(gbr)
                histories.append(gbr.loss_history_)
        model.fields[fname] = fmodel
        model.loss_histories[fname] = histories
    return model
