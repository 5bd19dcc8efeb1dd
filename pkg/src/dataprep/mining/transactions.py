"""Bridge from a columnar dataset to market-basket transactions."""

from __future__ import annotations

from ..errors import NoCategoricalColumns
from ..tabular import MISSING, Dataset


def transactionize(d: Dataset) -> list[set[str]]:
    """Each row becomes the itemset {"column=value"} over its non-missing
    categorical (nominal/ordinal) cells. Numeric columns are excluded unless
    discretized beforehand."""
    cats = d.categorical_columns()
    if not cats:
        raise NoCategoricalColumns("dataset has no categorical columns")
    out: list[set[str]] = []
    for i in range(d.row_count):
        items = {
            f"{c.name}={c.cells[i]}" for c in cats if c.cells[i] is not MISSING
        }
        out.append(items)
    return out
