"""Artifact export: cleaned CSV and the run report."""

from __future__ import annotations

from ..errors import IoError
from ..tabular import Dataset, ParseOptions, serialize_csv
from .report import RunReport


def export_csv(d: Dataset, path, options: ParseOptions | None = None) -> bytes:
    """Write the dataset as RFC 4180 CSV; returns the exact bytes written."""
    data = serialize_csv(d, options or ParseOptions())
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IoError(f"cannot write CSV to {path}: {exc}") from exc
    return data


def export_report(report: RunReport, path) -> bytes:
    """Write the run report as versioned JSON; returns the bytes written."""
    data = report.to_json().encode("utf-8")
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc}") from exc
    return data
