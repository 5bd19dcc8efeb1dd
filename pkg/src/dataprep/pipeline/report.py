"""Run report: the self-contained audit record of one pipeline execution.

Report plus original file suffices to reproduce the cleaned output: it embeds
the applied plan (with per-step results), the profiling snapshot, detector
reports, the merge log, and the constraint status before/after.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .. import __version__ as ENGINE_VERSION
from ..errors import IoError

REPORT_FORMAT_VERSION = 1


@dataclass
class RunReport:
    fingerprint: str = ""
    seed: int = 0
    source_name: str = "dataset"
    engine_version: str = ENGINE_VERSION
    rows_before: int = 0
    rows_after: int = 0
    columns_before: int = 0
    columns_after: int = 0
    cells_changed: int = 0
    type_inference: dict = field(default_factory=dict)
    profiles: list[dict] = field(default_factory=list)
    pair_profiles: list[dict] = field(default_factory=list)
    plot_recommendations: list[dict] = field(default_factory=list)
    correlation: dict | None = None
    importance: dict | None = None
    association_rules: list[dict] = field(default_factory=list)
    missing: dict = field(default_factory=dict)
    outlier_reports: list[dict] = field(default_factory=list)
    merge_log: dict = field(default_factory=lambda: {"records": []})
    applied_steps: list[dict] = field(default_factory=list)
    violations_before: list[dict] = field(default_factory=list)
    violations_after: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "format": "dataprep-report",
            "version": REPORT_FORMAT_VERSION,
            "engine_version": self.engine_version,
            "fingerprint": self.fingerprint,
            "seed": self.seed,
            "source_name": self.source_name,
            "shape": {
                "rows_before": self.rows_before,
                "rows_after": self.rows_after,
                "columns_before": self.columns_before,
                "columns_after": self.columns_after,
                "cells_changed": self.cells_changed,
            },
            "type_inference": self.type_inference,
            "profiles": self.profiles,
            "pair_profiles": self.pair_profiles,
            "plot_recommendations": self.plot_recommendations,
            "correlation": self.correlation,
            "importance": self.importance,
            "association_rules": self.association_rules,
            "missing": self.missing,
            "outlier_reports": self.outlier_reports,
            "merge_log": self.merge_log,
            "applied_steps": self.applied_steps,
            "violations_before": self.violations_before,
            "violations_after": self.violations_after,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def save(self, path):
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(self.to_json())
        except OSError as exc:
            raise IoError(f"cannot write report to {path}: {exc}") from exc
