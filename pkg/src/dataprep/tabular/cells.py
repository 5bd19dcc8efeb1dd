"""Cell values and variable types for the columnar dataset model.

A cell is one of: a finite ``float`` (numeric or epoch-seconds timestamp), an
interned ``str`` (category or free text), or the :data:`MISSING` sentinel.
NaN and infinities are never stored in cells; anything non-finite becomes
:data:`MISSING` at the parsing boundary.
"""

from __future__ import annotations

import math
import sys
from enum import Enum


class VariableType(str, Enum):
    CONTINUOUS = "continuous"
    NOMINAL = "nominal"
    ORDINAL = "ordinal"
    DATETIME = "datetime"
    TEXT = "text"

    @property
    def is_categorical(self) -> bool:
        return self in (VariableType.NOMINAL, VariableType.ORDINAL)

    @property
    def is_numeric(self) -> bool:
        # Timestamps are epoch seconds and take the numeric statistics path.
        return self in (VariableType.CONTINUOUS, VariableType.DATETIME)


class _MissingType:
    """Singleton tag for a missing cell. Distinct from every real value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MISSING"

    def __bool__(self) -> bool:
        return False

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self


MISSING = _MissingType()

Cell = float | str | _MissingType


def is_missing(cell: Cell) -> bool:
    return cell is MISSING


def coerce_number(value: float) -> Cell:
    """Map a parsed number into a cell: non-finite values become MISSING."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return MISSING
    return value


def intern_category(value: str) -> str:
    """Intern category text so repeated labels share one object."""
    return sys.intern(value)
