"""Outlier detectors and winsorization.

Univariate: IQR fences. Multivariate: DBSCAN noise points, isolation-forest
scores, local outlier factor. The multivariate detectors take raw point
matrices; the pipeline standardizes columns before calling them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NonNumeric, TooFewValues
from ..ml import Dbscan, IsolationForest, LocalOutlierFactor, estimate_eps
from ..tabular import MISSING, Column

IQR_MULTIPLIER = 1.5
WINSOR_LO_PCT = 5.0
WINSOR_HI_PCT = 95.0


@dataclass(frozen=True)
class OutlierFlag:
    row: int
    score: float
    column: str | None = None
    columns: tuple[str, ...] | None = None
    value: float | None = None

    def to_dict(self) -> dict:
        return {
            "row": self.row,
            "score": self.score,
            "column": self.column,
            "columns": list(self.columns) if self.columns else None,
            "value": self.value,
        }


@dataclass(frozen=True)
class OutlierReport:
    detector: str
    params: dict
    flags: tuple[OutlierFlag, ...]
    labels: tuple[int, ...] | None = None  # dbscan cluster labels
    scores: tuple[float, ...] | None = None  # per-point detector scores

    @property
    def flagged_rows(self) -> tuple[int, ...]:
        return tuple(f.row for f in self.flags)

    def to_dict(self) -> dict:
        return {
            "detector": self.detector,
            "params": self.params,
            "flags": [f.to_dict() for f in self.flags],
            "labels": list(self.labels) if self.labels is not None else None,
            "scores": list(self.scores) if self.scores is not None else None,
        }


def _require_numeric(c: Column, op: str):
    if not c.vtype.is_numeric:
        raise NonNumeric(f"{op} needs a numeric column, {c.name!r} is {c.vtype.value}")


def detect_iqr(c: Column, k: float = IQR_MULTIPLIER) -> OutlierReport:
    """Flag cells beyond Q1 - k*IQR / Q3 + k*IQR (type-7 quartiles).

    Scores are the distance beyond the fence in IQR units (absolute distance
    when the IQR is zero).
    """
    _require_numeric(c, "IQR detection")
    x = c.to_numpy()
    observed = x[~np.isnan(x)]
    if len(observed) < 4:
        raise TooFewValues(f"IQR detection needs >= 4 values, got {len(observed)}")
    q1, q3 = np.percentile(observed, [25.0, 75.0])
    iqr = q3 - q1
    lo, hi = q1 - k * iqr, q3 + k * iqr
    denom = iqr if iqr > 0 else 1.0
    flags = []
    for i, value in enumerate(x):
        if np.isnan(value):
            continue
        if value < lo or value > hi:
            dist = (lo - value) if value < lo else (value - hi)
            flags.append(
                OutlierFlag(row=i, score=float(dist / denom), column=c.name, value=float(value))
            )
    return OutlierReport(
        detector="iqr",
        params={"k": k, "q1": float(q1), "q3": float(q3), "lo": float(lo), "hi": float(hi)},
        flags=tuple(flags),
    )


def winsorize(c: Column, lo_pct: float = WINSOR_LO_PCT, hi_pct: float = WINSOR_HI_PCT) -> Column:
    """Clamp values outside the [lo_pct, hi_pct] percentiles (type 7)."""
    _require_numeric(c, "winsorization")
    if not lo_pct < hi_pct:
        raise ValueError(f"lo percentile must be < hi, got ({lo_pct}, {hi_pct})")
    x = c.to_numpy()
    observed = x[~np.isnan(x)]
    if len(observed) == 0:
        return c
    lo, hi = np.percentile(observed, [lo_pct, hi_pct])
    cells = tuple(
        cell if cell is MISSING else float(min(max(cell, lo), hi)) for cell in c.cells
    )
    return c.replace_cells(cells)


def detect_dbscan(
    points,
    eps: float | None = None,
    min_pts: int = 5,
    columns: tuple[str, ...] | None = None,
) -> tuple[OutlierReport, np.ndarray]:
    """DBSCAN noise points as outliers; returns (report, cluster labels).

    With eps omitted, the knee of the sorted min_pts-distance curve is used.
    """
    X = np.asarray(points, dtype=float)
    chosen_eps = estimate_eps(X, k=min_pts) if eps is None else eps
    model = Dbscan(eps=chosen_eps, min_pts=min_pts)
    labels = model.fit_predict(X)
    flags = []
    for i in np.flatnonzero(labels == -1):
        # Score: distance to the nearest non-noise point in eps units.
        others = X[labels != -1]
        if len(others):
            dist = float(np.sqrt(((others - X[i]) ** 2).sum(axis=1)).min())
        else:
            dist = float("inf")
        score = dist / chosen_eps if np.isfinite(dist) else float(len(X))
        flags.append(OutlierFlag(row=int(i), score=score, columns=columns))
    return (
        OutlierReport(
            detector="dbscan",
            params={"eps": float(chosen_eps), "min_pts": min_pts, "eps_estimated": eps is None},
            flags=tuple(flags),
            labels=tuple(int(v) for v in labels),
        ),
        labels,
    )


@dataclass(frozen=True)
class IsolationForestConfig:
    trees: int = 100
    subsample: int = 256
    seed: int = 0
    score_threshold: float = 0.6

    def to_dict(self) -> dict:
        return {
            "trees": self.trees,
            "subsample": self.subsample,
            "seed": self.seed,
            "score_threshold": self.score_threshold,
        }


def detect_isolation_forest(
    points,
    config: IsolationForestConfig | None = None,
    columns: tuple[str, ...] | None = None,
) -> OutlierReport:
    config = config or IsolationForestConfig()
    forest = IsolationForest(
        n_trees=config.trees,
        subsample=config.subsample,
        random_state=config.seed,
        score_threshold=config.score_threshold,
    )
    scores = forest.fit_score(points)
    flags = tuple(
        OutlierFlag(row=int(i), score=float(scores[i]), columns=columns)
        for i in np.flatnonzero(scores > config.score_threshold)
    )
    return OutlierReport(
        detector="isolation_forest",
        params=config.to_dict(),
        flags=flags,
        scores=tuple(float(s) for s in scores),
    )


def detect_lof(
    points,
    k: int = 20,
    score_threshold: float = 1.5,
    columns: tuple[str, ...] | None = None,
) -> OutlierReport:
    scores = LocalOutlierFactor(k=k, score_threshold=score_threshold).fit_score(points)
    flags = tuple(
        OutlierFlag(row=int(i), score=float(scores[i]), columns=columns)
        for i in np.flatnonzero(scores > score_threshold)
    )
    return OutlierReport(
        detector="lof",
        params={"k": k, "score_threshold": score_threshold},
        flags=flags,
        scores=tuple(float(s) for s in scores),
    )
