"""Per-column variable-type inference.

Rules, in precedence order (ratios over non-missing values):

1. DateTime when >= 95% parse as ISO-8601 dates/datetimes.
2. Numeric when >= 95% parse as finite numbers, then:
   a. ordinal when the values are small consecutive integers with <= 10
      distinct values (rating-scale style columns),
   b. continuous when distinct count > max(10, 5% of values),
   c. nominal otherwise (numeric-looking codes with low cardinality).
3. Ordinal when every distinct value (case-insensitive) falls inside one
   chain of the shipped ordinal lexicon (``ordinal_lexicon.json``).
4. Nominal for repeating text, Text for mostly-unique free text.

The 95% thresholds tolerate a handful of dirty cells without flipping a
column's type; dirty cells in a numeric/datetime column parse to MISSING.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources

from .cells import VariableType

NUMERIC_PARSE_THRESHOLD = 0.95
DATETIME_PARSE_THRESHOLD = 0.95
INT_ORDINAL_MAX_DISTINCT = 10
NOMINAL_MAX_DISTINCT = 20  # absolute floor before the 20%-of-values rule

DEFAULT_MISSING_TOKENS = frozenset({"", "NA", "NaN", "nan", "null", "inf", "-inf"})


def _load_lexicon() -> list[list[str]]:
    text = (
        resources.files("dataprep.tabular")
        .joinpath("ordinal_lexicon.json")
        .read_text(encoding="utf-8")
    )
    return [[v.lower() for v in chain] for chain in json.loads(text)["chains"]]


_LEXICON: list[list[str]] | None = None


def ordinal_lexicon() -> list[list[str]]:
    global _LEXICON
    if _LEXICON is None:
        _LEXICON = _load_lexicon()
    return _LEXICON


def parse_number(text: str) -> float | None:
    """Parse a finite or non-finite float; None when not a number at all."""
    try:
        return float(text)
    except ValueError:
        return None


def parse_datetime(text: str) -> float | None:
    """ISO-8601 date or datetime -> epoch seconds (naive treated as UTC)."""
    t = text.strip()
    if not t or t[0] not in "0123456789":
        return None
    if t.endswith("Z"):
        t = t[:-1] + "+00:00"
    try:
        dt = datetime.fromisoformat(t)
    except ValueError:
        return None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.timestamp()


@dataclass
class ColumnInference:
    """Inference diagnostics for one column."""

    name: str
    vtype: VariableType
    parse_ratios: dict[str, float]
    distinct_count: int
    missing_count: int
    ordinal_order: tuple[str, ...] | None = None


@dataclass
class TypeInferenceReport:
    columns: list[ColumnInference] = field(default_factory=list)

    def for_column(self, name: str) -> ColumnInference:
        for ci in self.columns:
            if ci.name == name:
                return ci
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "columns": [
                {
                    "name": ci.name,
                    "vtype": ci.vtype.value,
                    "parse_ratios": ci.parse_ratios,
                    "distinct_count": ci.distinct_count,
                    "missing_count": ci.missing_count,
                    "ordinal_order": list(ci.ordinal_order) if ci.ordinal_order else None,
                }
                for ci in self.columns
            ]
        }


def _match_lexicon(distinct_lower: set[str]) -> list[str] | None:
    if len(distinct_lower) < 2:
        return None
    for chain in ordinal_lexicon():
        if distinct_lower <= set(chain):
            return chain
    return None


def _first_seen_casing(values: list[str]) -> dict[str, str]:
    seen: dict[str, str] = {}
    for v in values:
        seen.setdefault(v.lower(), v)
    return seen


def infer_column_type(
    name: str,
    raw_values: list[str],
    missing_tokens: frozenset[str] = DEFAULT_MISSING_TOKENS,
) -> ColumnInference:
    if not raw_values:
        raise ValueError("raw_values must be non-empty")

    observed = [v for v in raw_values if v not in missing_tokens]
    missing_count = len(raw_values) - len(observed)
    if not observed:
        return ColumnInference(
            name=name,
            vtype=VariableType.TEXT,
            parse_ratios={"numeric": 0.0, "datetime": 0.0},
            distinct_count=0,
            missing_count=missing_count,
        )

    numbers = [parse_number(v) for v in observed]
    finite = [x for x in numbers if x is not None and math.isfinite(x)]
    parsed_any = [x for x in numbers if x is not None]
    num_ratio = len(parsed_any) / len(observed)
    dt_hits = sum(1 for v in observed if parse_datetime(v) is not None)
    dt_ratio = dt_hits / len(observed)
    distinct = list(dict.fromkeys(observed))
    ratios = {"numeric": num_ratio, "datetime": dt_ratio}

    def result(vtype, order=None, dcount=None):
        return ColumnInference(
            name=name,
            vtype=vtype,
            parse_ratios=ratios,
            distinct_count=len(distinct) if dcount is None else dcount,
            missing_count=missing_count,
            ordinal_order=tuple(order) if order else None,
        )

    if dt_ratio >= DATETIME_PARSE_THRESHOLD:
        return result(VariableType.DATETIME)

    if num_ratio >= NUMERIC_PARSE_THRESHOLD:
        finite_distinct = sorted(set(finite))
        repeats = len(finite_distinct) < len(finite)
        if (
            repeats
            and 3 <= len(finite_distinct) <= INT_ORDINAL_MAX_DISTINCT
            and all(x.is_integer() for x in finite_distinct)
            and finite_distinct[-1] - finite_distinct[0] == len(finite_distinct) - 1
        ):
            # Rating-scale integers: order ascending, keep original spellings.
            by_value: dict[float, str] = {}
            for v, x in zip(observed, numbers):
                if x is not None and math.isfinite(x):
                    by_value.setdefault(x, v)
            order = [by_value[x] for x in finite_distinct]
            return result(VariableType.ORDINAL, order=order, dcount=len(finite_distinct))
        if len(finite_distinct) > max(10, 0.05 * len(raw_values)) or not repeats:
            # Without repetition the values look like measurements, however few.
            return result(VariableType.CONTINUOUS, dcount=len(finite_distinct))
        return result(VariableType.NOMINAL, dcount=len(finite_distinct))

    casing = _first_seen_casing(observed)
    chain = _match_lexicon(set(casing))
    if chain is not None:
        order = [casing[v] for v in chain if v in casing]
        return result(VariableType.ORDINAL, order=order)

    if len(distinct) <= max(NOMINAL_MAX_DISTINCT, 0.2 * len(observed)):
        return result(VariableType.NOMINAL)
    return result(VariableType.TEXT)


def infer_type(
    raw_values: list[str],
    missing_tokens: frozenset[str] = DEFAULT_MISSING_TOKENS,
) -> tuple[VariableType, tuple[str, ...] | None]:
    """Classify raw text values; returns (vtype, ordinal order or None)."""
    ci = infer_column_type("<anonymous>", raw_values, missing_tokens)
    return ci.vtype, ci.ordinal_order
