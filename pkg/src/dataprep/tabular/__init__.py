"""Columnar dataset model, CSV parsing, and type inference."""

from .cells import MISSING, Cell, VariableType, is_missing
from .csv_io import ParseOptions, format_cell, load_csv, parse_csv, serialize_csv
from .dataset import Column, Dataset, drop_rows, select_columns
from .inference import (
    DEFAULT_MISSING_TOKENS,
    ColumnInference,
    TypeInferenceReport,
    infer_type,
    ordinal_lexicon,
)

__all__ = [
    "MISSING",
    "Cell",
    "VariableType",
    "is_missing",
    "ParseOptions",
    "parse_csv",
    "serialize_csv",
    "format_cell",
    "load_csv",
    "Column",
    "Dataset",
    "select_columns",
    "drop_rows",
    "DEFAULT_MISSING_TOKENS",
    "ColumnInference",
    "TypeInferenceReport",
    "infer_type",
    "ordinal_lexicon",
]
