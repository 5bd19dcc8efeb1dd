"""Repair engine: missing values, outliers, duplicates, constraints."""

from .constraints import (
    Constraint,
    ConstraintSet,
    DomainMembership,
    NotNull,
    Range,
    Unique,
    Violation,
    constraint_from_dict,
    validate_constraints,
)
from .dedupe import MergeLog, Removal, Substitution, dedupe, replay_merge_log
from .mice import MiceConfig, impute_mice
from .missing import (
    ImputeStrategy,
    MissingReport,
    drop_rows_by_missing,
    find_missing,
    impute_simple,
    mode_first_seen,
)
from .outliers import (
    IsolationForestConfig,
    OutlierFlag,
    OutlierReport,
    detect_dbscan,
    detect_iqr,
    detect_isolation_forest,
    detect_lof,
    winsorize,
)
from .similarity import (
    LabeledPair,
    SimilarityModel,
    component_distance,
    edit_distance,
    exact_duplicate_model,
    learn_similarity,
    normalized_edit_distance,
)

__all__ = [
    "Constraint",
    "ConstraintSet",
    "DomainMembership",
    "NotNull",
    "Range",
    "Unique",
    "Violation",
    "constraint_from_dict",
    "validate_constraints",
    "MergeLog",
    "Removal",
    "Substitution",
    "dedupe",
    "replay_merge_log",
    "MiceConfig",
    "impute_mice",
    "ImputeStrategy",
    "MissingReport",
    "drop_rows_by_missing",
    "find_missing",
    "impute_simple",
    "mode_first_seen",
    "IsolationForestConfig",
    "OutlierFlag",
    "OutlierReport",
    "detect_dbscan",
    "detect_iqr",
    "detect_isolation_forest",
    "detect_lof",
    "winsorize",
    "LabeledPair",
    "SimilarityModel",
    "component_distance",
    "edit_distance",
    "exact_duplicate_model",
    "learn_similarity",
    "normalized_edit_distance",
]
