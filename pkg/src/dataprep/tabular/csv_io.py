"""CSV ingestion and export (RFC 4180: quoted fields, CRLF or LF).

Parsing is two-pass: read raw string cells, infer each column's variable
type, then convert cells. Dirty cells that cannot be represented under the
winning type (e.g. text inside a 95%-numeric column) become MISSING, as do
non-finite numbers and the configured missing tokens.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone

from ..errors import DuplicateHeader, EmptyInput, MalformedCsv
from .cells import MISSING, Cell, VariableType, intern_category
from .dataset import Column, Dataset
from .inference import (
    DEFAULT_MISSING_TOKENS,
    ColumnInference,
    TypeInferenceReport,
    infer_column_type,
    parse_datetime,
    parse_number,
)


@dataclass(frozen=True)
class ParseOptions:
    delimiter: str = ","
    header: bool = True
    missing_tokens: frozenset[str] = DEFAULT_MISSING_TOKENS
    #: user overrides of inferred variable types, column name -> vtype value;
    #: carried in plan files so replays parse identically
    vtype_overrides: tuple[tuple[str, str], ...] = ()

    def override_for(self, name: str) -> VariableType | None:
        for col, vtype in self.vtype_overrides:
            if col == name:
                return VariableType(vtype)
        return None

    def with_override(self, name: str, vtype: str) -> "ParseOptions":
        kept = tuple((c, v) for c, v in self.vtype_overrides if c != name)
        return ParseOptions(
            delimiter=self.delimiter,
            header=self.header,
            missing_tokens=self.missing_tokens,
            vtype_overrides=kept + ((name, VariableType(vtype).value),),
        )

    def to_dict(self) -> dict:
        return {
            "delimiter": self.delimiter,
            "header": self.header,
            "missing_tokens": sorted(self.missing_tokens),
            "vtype_overrides": {c: v for c, v in self.vtype_overrides},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ParseOptions":
        return cls(
            delimiter=d.get("delimiter", ","),
            header=d.get("header", True),
            missing_tokens=frozenset(d.get("missing_tokens", DEFAULT_MISSING_TOKENS)),
            vtype_overrides=tuple(sorted(d.get("vtype_overrides", {}).items())),
        )


def _convert_cell(raw: str, vtype: VariableType, tokens: frozenset[str]) -> Cell:
    if raw in tokens:
        return MISSING
    if vtype is VariableType.CONTINUOUS:
        x = parse_number(raw)
        if x is None or not math.isfinite(x):
            return MISSING
        return x
    if vtype is VariableType.DATETIME:
        ts = parse_datetime(raw)
        return MISSING if ts is None else ts
    # Categorical / text: non-finite numeric spellings are still missing.
    x = parse_number(raw)
    if x is not None and not math.isfinite(x):
        return MISSING
    return intern_category(raw) if vtype.is_categorical else raw


def parse_csv(
    data: bytes | str,
    options: ParseOptions = ParseOptions(),
    name: str = "dataset",
) -> tuple[Dataset, TypeInferenceReport]:
    """Parse CSV bytes into a typed Dataset plus the inference report."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedCsv(f"input is not UTF-8: {exc}") from exc
    else:
        text = data
    if text.strip() == "":
        raise EmptyInput("no CSV content")

    reader = csv.reader(io.StringIO(text, newline=""), delimiter=options.delimiter)
    rows = [row for row in reader if row]  # skip fully blank lines
    if not rows:
        raise EmptyInput("no CSV rows")

    if options.header:
        header = [h for h in rows[0]]
        data_rows = rows[1:]
        if len(set(header)) != len(header):
            dupes = sorted({h for h in header if header.count(h) > 1})
            raise DuplicateHeader(f"duplicate header name(s): {dupes}")
    else:
        header = [f"col_{i + 1}" for i in range(len(rows[0]))]
        data_rows = rows

    width = len(header)
    for i, row in enumerate(data_rows, start=1):
        if len(row) != width:
            raise MalformedCsv(
                f"row {i} has {len(row)} fields, expected {width}", row=i
            )

    raw_columns = [[row[j] for row in data_rows] for j in range(width)]

    inferences: list[ColumnInference] = []
    columns: list[Column] = []
    for cname, raw in zip(header, raw_columns):
        if raw:
            ci = infer_column_type(cname, raw, options.missing_tokens)
        else:
            ci = ColumnInference(
                name=cname,
                vtype=VariableType.TEXT,
                parse_ratios={"numeric": 0.0, "datetime": 0.0},
                distinct_count=0,
                missing_count=0,
            )
        override = options.override_for(cname)
        vtype = override or ci.vtype
        order = ci.ordinal_order
        if override is not None and override is not ci.vtype:
            order = None
            if override is VariableType.ORDINAL:
                # fall back to the inferred chain, else first-seen order
                order = ci.ordinal_order or tuple(
                    dict.fromkeys(
                        v for v in raw if v not in options.missing_tokens
                    )
                )
        inferences.append(
            ColumnInference(
                name=cname,
                vtype=vtype,
                parse_ratios=ci.parse_ratios,
                distinct_count=ci.distinct_count,
                missing_count=ci.missing_count,
                ordinal_order=order,
            )
        )
        cells = tuple(_convert_cell(v, vtype, options.missing_tokens) for v in raw)
        columns.append(Column(name=cname, vtype=vtype, cells=cells, ordinal_order=order))

    return Dataset(name=name, columns=tuple(columns)), TypeInferenceReport(columns=inferences)


def format_cell(cell: Cell, vtype: VariableType) -> str:
    """Render one cell for CSV export; MISSING exports as the empty field."""
    if cell is MISSING:
        return ""
    if vtype is VariableType.DATETIME:
        dt = datetime.fromtimestamp(float(cell), tz=timezone.utc)
        if float(cell) % 86400 == 0:
            return dt.strftime("%Y-%m-%d")
        return dt.isoformat().replace("+00:00", "+00:00")
    if isinstance(cell, float):
        if cell.is_integer() and abs(cell) < 1e16:
            return str(int(cell))
        return repr(cell)
    return str(cell)


def serialize_csv(d: Dataset, options: ParseOptions = ParseOptions()) -> bytes:
    """Dataset -> CSV bytes; inverse of parse_csv up to float formatting."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=options.delimiter, lineterminator="\n")
    if options.header:
        writer.writerow(d.column_names)
    vtypes = [c.vtype for c in d.columns]
    for row in d.iter_rows():
        writer.writerow([format_cell(cell, vt) for cell, vt in zip(row, vtypes)])
    return buf.getvalue().encode("utf-8")


def load_csv(path, options: ParseOptions = ParseOptions(), name: str | None = None):
    with open(path, "rb") as fh:
        data = fh.read()
    import os

    return parse_csv(data, options, name=name or os.path.splitext(os.path.basename(path))[0])
