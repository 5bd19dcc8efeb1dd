"""Numeric scalers: z-score standardization and min-max normalization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonNumeric, ZeroRange, ZeroVariance
from ..tabular import MISSING, Column


@dataclass(frozen=True)
class ScalerParams:
    kind: str  # "zscore" | "minmax"
    mu: float | None = None
    sigma: float | None = None
    min: float | None = None
    max: float | None = None
    range: tuple[float, float] | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mu": self.mu,
            "sigma": self.sigma,
            "min": self.min,
            "max": self.max,
            "range": list(self.range) if self.range else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScalerParams":
        return cls(
            kind=d["kind"],
            mu=d.get("mu"),
            sigma=d.get("sigma"),
            min=d.get("min"),
            max=d.get("max"),
            range=tuple(d["range"]) if d.get("range") else None,
        )


def _require_numeric(c: Column, op: str):
    if not c.vtype.is_numeric:
        raise NonNumeric(f"{op} needs a numeric column, {c.name!r} is {c.vtype.value}")


def zscore(c: Column) -> tuple[Column, ScalerParams]:
    """(x - mean) / sample standard deviation (n-1)."""
    _require_numeric(c, "z-score standardization")
    x = c.observed_values()
    if len(x) < 2:
        raise ZeroVariance(f"{c.name!r} has too few values to standardize")
    mu = float(x.mean())
    sigma = float(np.std(x, ddof=1))
    if sigma == 0.0:
        raise ZeroVariance(f"{c.name!r} is constant")
    cells = tuple(
        MISSING if cell is MISSING else (cell - mu) / sigma for cell in c.cells
    )
    return c.replace_cells(cells), ScalerParams(kind="zscore", mu=mu, sigma=sigma)


def minmax(c: Column, range_: tuple[float, float] = (0.0, 1.0)) -> tuple[Column, ScalerParams]:
    """Affine map sending observed min/max onto the target range."""
    _require_numeric(c, "min-max normalization")
    if tuple(range_) not in ((0.0, 1.0), (-1.0, 1.0)):
        raise ValueError(f"target range must be [0,1] or [-1,1], got {range_}")
    x = c.observed_values()
    if len(x) == 0:
        raise ZeroRange(f"{c.name!r} has no observed values")
    lo, hi = float(x.min()), float(x.max())
    if hi == lo:
        raise ZeroRange(f"{c.name!r} is constant")
    a, b = range_
    # t in [0, 1] hits 0 and 1 exactly at the observed extremes, so the
    # output attains both endpoints of the target range exactly.
    cells = tuple(
        MISSING
        if cell is MISSING
        else a + ((cell - lo) / (hi - lo)) * (b - a)
        for cell in c.cells
    )
    return c.replace_cells(cells), ScalerParams(
        kind="minmax", min=lo, max=hi, range=(float(a), float(b))
    )


def invert_scaler(c: Column, params: ScalerParams) -> Column:
    if params.kind == "zscore":
        cells = tuple(
            MISSING if cell is MISSING else cell * params.sigma + params.mu
            for cell in c.cells
        )
    else:
        a, b = params.range
        cells = tuple(
            MISSING
            if cell is MISSING
            else params.min + ((cell - a) / (b - a)) * (params.max - params.min)
            for cell in c.cells
        )
    return c.replace_cells(cells)
