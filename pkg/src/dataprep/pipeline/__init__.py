"""Plan construction, execution, reporting, and export."""

from .execute import BuildOptions, build_plan, execute_plan
from .export import export_csv, export_report
from .fingerprint import fingerprint_bytes, fingerprint_file
from .plan import PLAN_FORMAT_VERSION, CleaningPlan
from .report import REPORT_FORMAT_VERSION, RunReport
from .steps import OPS, StepOrigin, StepRecord

__all__ = [
    "BuildOptions",
    "build_plan",
    "execute_plan",
    "export_csv",
    "export_report",
    "fingerprint_bytes",
    "fingerprint_file",
    "PLAN_FORMAT_VERSION",
    "CleaningPlan",
    "REPORT_FORMAT_VERSION",
    "RunReport",
    "OPS",
    "StepOrigin",
    "StepRecord",
]
