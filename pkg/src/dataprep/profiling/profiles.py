"""Per-column statistics and distribution-shape classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import stats as sstats

from ..errors import EmptyColumn
from ..tabular import MISSING, Column, VariableType

#: |skewness| at or below this is "normal"; above, a skew direction.
SKEW_THRESHOLD = 0.5
#: minimum observed values before the uniformity test is attempted
UNIFORM_TEST_MIN_N = 50
UNIFORM_TEST_P = 0.05
UNIFORM_TEST_BINS = 10


class DistributionShape(str, Enum):
    NORMAL = "normal"
    SKEWED_LEFT = "skewed_left"
    SKEWED_RIGHT = "skewed_right"
    UNIFORM = "uniform"
    VARIED = "varied"
    BINARY = "binary"


def sample_std(x: np.ndarray) -> float:
    """Sample standard deviation (n-1); 0.0 for fewer than two values."""
    if len(x) < 2:
        return 0.0
    return float(np.std(x, ddof=1))


def adjusted_skewness(x: np.ndarray) -> float:
    """Adjusted Fisher-Pearson skewness G1; 0.0 when undefined (n < 3 or
    zero spread)."""
    n = len(x)
    if n < 3:
        return 0.0
    m = x.mean()
    m2 = float(((x - m) ** 2).mean())
    if m2 == 0.0:
        return 0.0
    m3 = float(((x - m) ** 3).mean())
    g1 = m3 / m2**1.5
    return g1 * math.sqrt(n * (n - 1)) / (n - 2)


def excess_kurtosis(x: np.ndarray) -> float:
    """Excess kurtosis of the observed values; 0.0 when undefined."""
    n = len(x)
    if n < 2:
        return 0.0
    m = x.mean()
    m2 = float(((x - m) ** 2).mean())
    if m2 == 0.0:
        return 0.0
    m4 = float(((x - m) ** 4).mean())
    return m4 / m2**2 - 3.0


def uniformity_pvalue(x: np.ndarray, bins: int = UNIFORM_TEST_BINS) -> float:
    """Chi-square goodness of fit against uniform over equal-width bins."""
    lo, hi = float(x.min()), float(x.max())
    if hi <= lo:
        return 0.0
    observed, _ = np.histogram(x, bins=bins, range=(lo, hi))
    expected = len(x) / bins
    stat = float(((observed - expected) ** 2 / expected).sum())
    return float(sstats.chi2.sf(stat, bins - 1))


@dataclass(frozen=True)
class ColumnProfile:
    name: str
    vtype: VariableType
    count: int
    missing_count: int
    distinct_count: int
    shape: DistributionShape
    mean: float | None = None
    median: float | None = None
    mode: object = None
    std: float | None = None
    skewness: float | None = None
    kurtosis: float | None = None
    min: float | None = None
    max: float | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vtype": self.vtype.value,
            "count": self.count,
            "missing_count": self.missing_count,
            "distinct_count": self.distinct_count,
            "shape": self.shape.value,
            "mean": self.mean,
            "median": self.median,
            "mode": self.mode,
            "std": self.std,
            "skewness": self.skewness,
            "kurtosis": self.kurtosis,
            "min": self.min,
            "max": self.max,
        }


def _mode_first_seen(cells) -> object:
    counts: dict = {}
    for c in cells:
        if c is not MISSING:
            counts[c] = counts.get(c, 0) + 1
    if not counts:
        return None
    best = max(counts.values())
    for c, k in counts.items():  # insertion order = first seen
        if k == best:
            return c
    return None


def _numeric_shape(x: np.ndarray, distinct: int) -> tuple[DistributionShape, float]:
    skew = adjusted_skewness(x)
    if distinct == 2:
        return DistributionShape.BINARY, skew
    if len(x) >= UNIFORM_TEST_MIN_N and uniformity_pvalue(x) > UNIFORM_TEST_P:
        return DistributionShape.UNIFORM, skew
    if skew > SKEW_THRESHOLD:
        return DistributionShape.SKEWED_RIGHT, skew
    if skew < -SKEW_THRESHOLD:
        return DistributionShape.SKEWED_LEFT, skew
    return DistributionShape.NORMAL, skew


def profile_column(c: Column) -> ColumnProfile:
    """Statistics over non-missing cells plus a coarse shape label."""
    count = len(c.cells)
    missing = c.missing_count
    if missing == count:
        raise EmptyColumn(f"column {c.name!r} has no observed values")
    distinct = len(c.distinct())
    mode = _mode_first_seen(c.cells)

    if c.vtype.is_numeric:
        x = c.observed_values()
        shape, skew = _numeric_shape(x, distinct)
        return ColumnProfile(
            name=c.name,
            vtype=c.vtype,
            count=count,
            missing_count=missing,
            distinct_count=distinct,
            shape=shape,
            mean=float(x.mean()),
            median=float(np.median(x)),
            mode=mode,
            std=sample_std(x),
            skewness=skew,
            kurtosis=excess_kurtosis(x),
            min=float(x.min()),
            max=float(x.max()),
        )

    shape = DistributionShape.BINARY if distinct == 2 else DistributionShape.VARIED
    return ColumnProfile(
        name=c.name,
        vtype=c.vtype,
        count=count,
        missing_count=missing,
        distinct_count=distinct,
        shape=shape,
        mode=mode,
    )
