"""Pairwise association tests between columns.

The test matches the type pair: Pearson correlation for numeric-numeric,
chi-square independence for categorical-categorical, one-way ANOVA for
categorical-numeric. Relation labels follow fixed cutoffs: |r| >= 0.6 is
linear, |r| < 0.2 or p >= 0.05 is no relation, anything between is a signed
relation (categorical tests are unsigned and report positive association;
ordinal-numeric pairs take their sign from the order codes).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import stats as sstats

from ..errors import LengthMismatch, TooFewNumericColumns
from ..tabular import MISSING, Column, Dataset, VariableType

LINEAR_R = 0.6
NO_RELATION_R = 0.2
P_CUTOFF = 0.05


class RelationLabel(str, Enum):
    POSITIVE_LINEAR = "positive_linear"
    NEGATIVE_LINEAR = "negative_linear"
    POSITIVE_RELATION = "positive_relation"
    NEGATIVE_RELATION = "negative_relation"
    NO_RELATION = "no_relation"
    NO_CLEAR_RELATION = "no_clear_relation"


@dataclass(frozen=True)
class PairProfile:
    a_name: str
    b_name: str
    relation: RelationLabel
    pearson_r: float | None = None
    covariance: float | None = None
    chi_square_p: float | None = None
    anova_p: float | None = None
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "a": self.a_name,
            "b": self.b_name,
            "relation": self.relation.value,
            "pearson_r": self.pearson_r,
            "covariance": self.covariance,
            "chi_square_p": self.chi_square_p,
            "anova_p": self.anova_p,
            "degenerate": self.degenerate,
        }


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    xm, ym = x - x.mean(), y - y.mean()
    denom = np.sqrt((xm @ xm) * (ym @ ym))
    if denom == 0.0:  # squared residuals can underflow for near-equal values
        return 0.0
    return float((xm @ ym) / denom)


def _complete_numeric(a: Column, b: Column):
    xa, xb = a.to_numpy(), b.to_numpy()
    mask = ~(np.isnan(xa) | np.isnan(xb))
    return xa[mask], xb[mask]


def _complete_pairs(a: Column, b: Column):
    return [
        (ca, cb)
        for ca, cb in zip(a.cells, b.cells)
        if ca is not MISSING and cb is not MISSING
    ]


def chi_square_independence(pairs) -> tuple[float, float, int]:
    """Pearson chi-square on the contingency table; returns (stat, p, df)."""
    rows = sorted({a for a, _ in pairs}, key=str)
    cols = sorted({b for _, b in pairs}, key=str)
    table = np.zeros((len(rows), len(cols)))
    ri = {v: i for i, v in enumerate(rows)}
    ci = {v: i for i, v in enumerate(cols)}
    for a, b in pairs:
        table[ri[a], ci[b]] += 1
    df = (len(rows) - 1) * (len(cols) - 1)
    if df == 0:
        return 0.0, 1.0, 0
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / table.sum()
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(expected > 0, (table - expected) ** 2 / expected, 0.0)
    stat = float(terms.sum())
    return stat, float(sstats.chi2.sf(stat, df)), df


def one_way_anova(groups: list[np.ndarray]) -> tuple[float, float]:
    """One-way ANOVA F-test across groups; returns (F, p)."""
    k = len(groups)
    n = sum(len(g) for g in groups)
    if k < 2 or n <= k:
        return 0.0, 1.0
    grand = np.concatenate(groups).mean()
    ssb = sum(len(g) * (g.mean() - grand) ** 2 for g in groups)
    ssw = sum(float(((g - g.mean()) ** 2).sum()) for g in groups)
    if ssw == 0.0:
        return (np.inf, 0.0) if ssb > 0 else (0.0, 1.0)
    f = (ssb / (k - 1)) / (ssw / (n - k))
    return float(f), float(sstats.f.sf(f, k - 1, n - k))


def _categorical_codes(col: Column, values) -> dict:
    if col.vtype is VariableType.ORDINAL and col.ordinal_order:
        return {v: i for i, v in enumerate(col.ordinal_order)}
    return {v: i for i, v in enumerate(sorted(values, key=str))}


def profile_pair(a: Column, b: Column) -> PairProfile:
    if len(a) != len(b):
        raise LengthMismatch(f"{a.name}: {len(a)} rows, {b.name}: {len(b)} rows")

    a_num, b_num = a.vtype.is_numeric, b.vtype.is_numeric

    if a_num and b_num:
        x, y = _complete_numeric(a, b)
        if len(x) < 2 or np.all(x == x[0]) or np.all(y == y[0]):
            return PairProfile(a.name, b.name, RelationLabel.NO_RELATION, degenerate=True)
        r = pearson(x, y)
        cov = float(np.cov(x, y, ddof=1)[0, 1])
        if r >= LINEAR_R:
            rel = RelationLabel.POSITIVE_LINEAR
        elif r <= -LINEAR_R:
            rel = RelationLabel.NEGATIVE_LINEAR
        elif abs(r) < NO_RELATION_R:
            rel = RelationLabel.NO_RELATION
        elif r > 0:
            rel = RelationLabel.POSITIVE_RELATION
        else:
            rel = RelationLabel.NEGATIVE_RELATION
        return PairProfile(a.name, b.name, rel, pearson_r=r, covariance=cov)

    pairs = _complete_pairs(a, b)
    if not pairs:
        return PairProfile(a.name, b.name, RelationLabel.NO_RELATION, degenerate=True)

    if not a_num and not b_num:
        _, p, df = chi_square_independence(pairs)
        if df == 0:
            return PairProfile(
                a.name, b.name, RelationLabel.NO_RELATION, chi_square_p=p, degenerate=True
            )
        rel = RelationLabel.NO_RELATION if p >= P_CUTOFF else RelationLabel.POSITIVE_RELATION
        return PairProfile(a.name, b.name, rel, chi_square_p=p)

    cat, num = (a, b) if not a_num else (b, a)
    by_level: dict = {}
    for ca, cb in pairs:
        level, value = (ca, cb) if not a_num else (cb, ca)
        by_level.setdefault(level, []).append(float(value))
    groups = [np.array(v) for v in by_level.values()]
    _, p = one_way_anova(groups)
    if len(groups) < 2:
        return PairProfile(
            a.name, b.name, RelationLabel.NO_RELATION, anova_p=p, degenerate=True
        )
    if p >= P_CUTOFF:
        rel = RelationLabel.NO_RELATION
    elif cat.vtype is VariableType.ORDINAL:
        codes = _categorical_codes(cat, by_level.keys())
        xs, ys = [], []
        for level, values in by_level.items():
            xs.extend([codes[level]] * len(values))
            ys.extend(values)
        xs, ys = np.array(xs, dtype=float), np.array(ys)
        r = pearson(xs, ys) if len(set(xs)) > 1 else 0.0
        rel = (
            RelationLabel.NEGATIVE_RELATION if r < 0 else RelationLabel.POSITIVE_RELATION
        )
    else:
        rel = RelationLabel.POSITIVE_RELATION
    return PairProfile(a.name, b.name, rel, anova_p=p)


def correlation_matrix(d: Dataset) -> tuple[np.ndarray, list[str]]:
    """Pearson matrix over continuous columns, pairwise-complete.

    Degenerate pairs (fewer than two complete rows or zero variance) get 0.0;
    the diagonal is exactly 1.0.
    """
    cols = d.numeric_columns()
    if len(cols) < 2:
        raise TooFewNumericColumns("correlation matrix needs >= 2 numeric columns")
    arrays = [c.to_numpy() for c in cols]
    n = len(cols)
    m = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = arrays[i], arrays[j]
            mask = ~(np.isnan(x) | np.isnan(y))
            xs, ys = x[mask], y[mask]
            if len(xs) < 2 or np.all(xs == xs[0]) or np.all(ys == ys[0]):
                r = 0.0
            else:
                r = pearson(xs, ys)
            m[i, j] = m[j, i] = r
    return m, [c.name for c in cols]
