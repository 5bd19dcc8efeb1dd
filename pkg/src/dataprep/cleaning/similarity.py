"""Learnable row-similarity for duplicate and inconsistency resolution.

All distances are dissimilarities in [0, 1] (0 = identical), so the repair
thresholds read naturally: attribute values canonicalize when their distance
is at most r1, whole rows merge when their weighted distance is at most rn.

Component distances per attribute type: normalized edit distance for free
text, absolute difference scaled by the column range for numerics, 0/1
mismatch for categories. A missing cell is distance 1 from any observed
value and 0 from another missing cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import SingleClassPairs
from ..tabular import MISSING, Cell, VariableType


def edit_distance(a: str, b: str) -> int:
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        row = [i]
        for j, cb in enumerate(b, 1):
            row.append(min(previous[j] + 1, row[j - 1] + 1, previous[j - 1] + (ca != cb)))
        previous = row
    return previous[-1]


def normalized_edit_distance(a: str, b: str) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return edit_distance(a, b) / longest


def component_distance(
    a: Cell, b: Cell, vtype: VariableType, scale: tuple[float, float] | None
) -> float:
    if a is MISSING and b is MISSING:
        return 0.0
    if a is MISSING or b is MISSING:
        return 1.0
    if vtype.is_numeric:
        if scale is None or scale[1] <= scale[0]:
            return 0.0 if float(a) == float(b) else 1.0
        span = scale[1] - scale[0]
        return min(abs(float(a) - float(b)) / span, 1.0)
    if vtype is VariableType.TEXT:
        return normalized_edit_distance(str(a), str(b))
    return 0.0 if a == b else 1.0


@dataclass(frozen=True)
class SimilarityModel:
    """Attribute weights plus the two repair thresholds."""

    attributes: tuple[str, ...]
    weights: tuple[float, ...]
    r1: float
    rn: float
    vtypes: dict[str, VariableType]
    scales: dict[str, tuple[float, float] | None]

    def __post_init__(self):
        assert all(w >= 0 for w in self.weights)
        assert abs(sum(self.weights) - 1.0) < 1e-9

    def attribute_distance(self, name: str, a: Cell, b: Cell) -> float:
        return component_distance(a, b, self.vtypes[name], self.scales.get(name))

    def row_distance(self, row_a: dict[str, Cell], row_b: dict[str, Cell]) -> float:
        total = 0.0
        for name, w in zip(self.attributes, self.weights):
            total += w * self.attribute_distance(name, row_a.get(name, MISSING), row_b.get(name, MISSING))
        return total

    def to_dict(self) -> dict:
        return {
            "attributes": list(self.attributes),
            "weights": list(self.weights),
            "r1": self.r1,
            "rn": self.rn,
            "vtypes": {k: v.value for k, v in self.vtypes.items()},
            "scales": {k: list(v) if v else None for k, v in self.scales.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SimilarityModel":
        return cls(
            attributes=tuple(d["attributes"]),
            weights=tuple(d["weights"]),
            r1=d["r1"],
            rn=d["rn"],
            vtypes={k: VariableType(v) for k, v in d["vtypes"].items()},
            scales={k: tuple(v) if v else None for k, v in d["scales"].items()},
        )


def exact_duplicate_model(attributes, vtypes) -> SimilarityModel:
    """Degenerate model: r1 = rn = 0, uniform weights (exact-duplicate mode)."""
    n = len(attributes)
    return SimilarityModel(
        attributes=tuple(attributes),
        weights=tuple(1.0 / n for _ in range(n)),
        r1=0.0,
        rn=0.0,
        vtypes=dict(vtypes),
        scales={a: None for a in attributes},
    )


@dataclass(frozen=True)
class LabeledPair:
    row_a: dict[str, Cell]
    row_b: dict[str, Cell]
    similar: bool


def _logistic_weights(features: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Full-batch logistic regression; returns nonnegative normalized weights."""
    n, p = features.shape
    w = np.zeros(p)
    b = 0.0
    lr = 1.0
    for _ in range(500):
        z = features @ w + b
        pred = 1.0 / (1.0 + np.exp(-z))
        err = pred - labels
        w -= lr * (features.T @ err) / n
        b -= lr * err.mean()
    w = np.maximum(w, 0.0)
    if w.sum() <= 0:
        return np.full(p, 1.0 / p)
    return w / w.sum()


def _midpoint_threshold(similar_vals: list[float], dissimilar_vals: list[float]) -> float:
    """Midpoint of the class gap; median crossover when the classes overlap."""
    hi_sim = max(similar_vals)
    lo_dis = min(dissimilar_vals)
    if lo_dis > hi_sim:
        return (hi_sim + lo_dis) / 2.0
    return (float(np.median(similar_vals)) + float(np.median(dissimilar_vals))) / 2.0


def learn_similarity(pairs: list[LabeledPair]) -> SimilarityModel:
    """Fit attribute weights and the r1/rn thresholds from labeled pairs."""
    if not any(p.similar for p in pairs) or not any(not p.similar for p in pairs):
        raise SingleClassPairs("need at least one similar and one dissimilar pair")

    attributes = sorted({k for p in pairs for k in (*p.row_a, *p.row_b)})

    # Attribute types and numeric scales come from the pair values themselves.
    vtypes: dict[str, VariableType] = {}
    scales: dict[str, tuple[float, float] | None] = {}
    for name in attributes:
        values = [
            r.get(name)
            for p in pairs
            for r in (p.row_a, p.row_b)
            if r.get(name) is not None and r.get(name) is not MISSING
        ]
        if values and all(isinstance(v, (int, float)) for v in values):
            vtypes[name] = VariableType.CONTINUOUS
            scales[name] = (float(min(values)), float(max(values)))
        else:
            lengths = {len(str(v)) for v in values}
            # Long, variable-length strings behave like free text.
            is_text = bool(values) and (max(lengths) > 12 or len(lengths) > 3)
            vtypes[name] = VariableType.TEXT if is_text else VariableType.NOMINAL
            scales[name] = None

    def distances(pair: LabeledPair) -> list[float]:
        return [
            component_distance(
                pair.row_a.get(name, MISSING),
                pair.row_b.get(name, MISSING),
                vtypes[name],
                scales[name],
            )
            for name in attributes
        ]

    features = np.array([distances(p) for p in pairs])
    labels = np.array([0.0 if p.similar else 1.0 for p in pairs])
    weights = _logistic_weights(features, labels)

    sim_rows = features[labels == 0.0]
    dis_rows = features[labels == 1.0]
    r1 = _midpoint_threshold(
        [float(r.max()) for r in sim_rows], [float(r.max()) for r in dis_rows]
    )
    sim_S = [float(r @ weights) for r in sim_rows]
    dis_S = [float(r @ weights) for r in dis_rows]
    rn = _midpoint_threshold(sim_S, dis_S)

    return SimilarityModel(
        attributes=tuple(attributes),
        weights=tuple(float(w) for w in weights),
        r1=min(max(r1, 0.0), 1.0),
        rn=min(max(rn, 0.0), 1.0),
        vtypes=vtypes,
        scales=scales,
    )
