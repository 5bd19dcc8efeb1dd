"""Per-column preprocessing recommendations (rules or trained model).

Rule fallback mirrors the curated meta-dataset: high-cardinality categoricals
get frequency encoding, binary and ordinal categoricals label encoding,
moderate nominals one-hot; skewed positive numerics a power transform then
standardization; wide-range regression targets min-max to [0, 1]; near-normal
numeric predictors z-score unless already standardized.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..pipeline.steps import StepOrigin, StepRecord
from ..profiling.profiles import ColumnProfile, DistributionShape
from ..tabular import VariableType
from .gbm import GbmModel

FREQUENCY_CARDINALITY = 50
SKEW_FOR_POWER = 0.5
#: |mean| and |std-1| below this count as "already standardized"
ALREADY_SCALED_TOL = 0.05
#: range/median ratio above which a numeric column counts as wide-range
WIDE_RANGE_RATIO = 100.0


@dataclass(frozen=True)
class RecommendContext:
    analysis_type: str = "any"  # "any" | "classification" | "regression"
    is_target: bool = False


def _already_standardized(profile: ColumnProfile) -> bool:
    if profile.mean is None or profile.std is None:
        return False
    return abs(profile.mean) <= ALREADY_SCALED_TOL and abs(profile.std - 1.0) <= ALREADY_SCALED_TOL


def _already_unit_range(profile: ColumnProfile) -> bool:
    if profile.min is None or profile.max is None:
        return False
    return 0.0 - 1e-9 <= profile.min and profile.max <= 1.0 + 1e-9


def _is_wide_range(profile: ColumnProfile) -> bool:
    if profile.min is None or profile.max is None:
        return False
    span = profile.max - profile.min
    scale = max(abs(profile.median or 0.0), 1.0)
    return span > WIDE_RANGE_RATIO * scale


def meta_inputs_for_profile(profile: ColumnProfile, context: RecommendContext) -> dict[str, str]:
    """Map a column profile onto the recommender's meta-feature vocabulary."""
    if profile.vtype.is_categorical or profile.vtype is VariableType.TEXT:
        if profile.distinct_count >= 100:
            dist = "categorical_100plus"
        elif profile.distinct_count == 2:
            dist = "categorical_binary"
        elif profile.distinct_count >= 10:
            dist = "categorical_many"
        else:
            dist = "categorical"
        cardinality = (
            "high"
            if profile.distinct_count >= FREQUENCY_CARDINALITY
            else "med"
            if profile.distinct_count >= 10
            else "low"
        )
        scale = "ordinal" if profile.vtype is VariableType.ORDINAL else "nominal"
    else:
        if profile.shape is DistributionShape.SKEWED_LEFT:
            dist = "left_skewed"
        elif profile.shape is DistributionShape.SKEWED_RIGHT:
            dist = "right_skewed"
        elif _is_wide_range(profile):
            dist = "continuous_wide_range"
        else:
            dist = "continuous"
        cardinality = "high"
        scale = "ratio"
    return {
        "original_distribution": dist,
        "analysis_type": context.analysis_type,
        "variable_nature": "target" if context.is_target else "predictor",
        "scale_of_measurement": scale,
        "cardinality": cardinality,
        "data_scope": "unset",
    }


def _step(idx: int, op: str, column: str, params: dict | None = None) -> StepRecord:
    return StepRecord(
        id=f"r-{column}-{idx}",
        op=op,
        params=params or {},
        columns=(column,),
        origin=StepOrigin.RECOMMENDED,
    )


def _rule_steps(profile: ColumnProfile, context: RecommendContext) -> list[StepRecord]:
    name = profile.name
    steps: list[StepRecord] = []
    idx = 0

    if profile.vtype.is_categorical:
        if profile.missing_count > 0:
            steps.append(_step(idx, "impute", name, {"strategy": "mode"}))
            idx += 1
        if profile.vtype is VariableType.ORDINAL or profile.distinct_count == 2:
            steps.append(_step(idx, "label_encode", name))
        elif profile.distinct_count > FREQUENCY_CARDINALITY:
            steps.append(_step(idx, "frequency_encode", name))
        else:
            steps.append(_step(idx, "one_hot_encode", name))
        return steps

    if profile.vtype is VariableType.CONTINUOUS:
        skewed = profile.skewness is not None and abs(profile.skewness) > SKEW_FOR_POWER
        if profile.missing_count > 0:
            strategy = "median" if skewed or _is_wide_range(profile) else "mean"
            steps.append(_step(idx, "impute", name, {"strategy": strategy}))
            idx += 1
        if context.is_target and context.analysis_type != "classification":
            if not _already_unit_range(profile):
                steps.append(_step(idx, "minmax", name, {"range": [0.0, 1.0]}))
            return steps
        if skewed and profile.min is not None and profile.min > 0:
            steps.append(_step(idx, "boxcox", name))
            idx += 1
            steps.append(_step(idx, "zscore", name))
            return steps
        if not _already_standardized(profile) and profile.std not in (None, 0.0):
            steps.append(_step(idx, "zscore", name))
        return steps

    # datetime / free text columns are profiled but not transformed
    return steps


_MODEL_TRANSFORM_OPS = {
    "frequency_encoding": "frequency_encode",
    "label_encoding": "label_encode",
    "one_hot_encoding": "one_hot_encode",
    "square": "power",
    "boxcox": "boxcox",
    "discretization": "discretize",
}

_MODEL_SCALING_OPS = {"minmax": "minmax", "zscore": "zscore"}


def _model_steps(
    profile: ColumnProfile, context: RecommendContext, model: GbmModel
) -> list[StepRecord]:
    labels = model.predict(meta_inputs_for_profile(profile, context))
    name = profile.name
    steps: list[StepRecord] = []
    idx = 0
    handling = labels["missing_value_handling"]
    if handling != "none" and profile.missing_count > 0:
        steps.append(_step(idx, "impute", name, {"strategy": handling}))
        idx += 1
    if labels["outlier_treatment"] == "yes" and profile.vtype is VariableType.CONTINUOUS:
        steps.append(_step(idx, "winsorize", name, {"lo_pct": 5.0, "hi_pct": 95.0}))
        idx += 1
    transform = labels["transformation"]
    if transform != "none":
        op = _MODEL_TRANSFORM_OPS[transform]
        params: dict = {}
        if op == "power":
            params = {"kind": "square"}
        elif op == "discretize" and profile.min is not None and profile.max is not None:
            span = (profile.max - profile.min) or 1.0
            params = {"edges": [profile.min + span * k / 4.0 for k in range(5)]}
        steps.append(_step(idx, op, name, params))
        idx += 1
    scaling = labels["feature_scaling"]
    if scaling != "none" and profile.vtype is VariableType.CONTINUOUS:
        params = {"range": [0.0, 1.0]} if scaling == "minmax" else {}
        steps.append(_step(idx, _MODEL_SCALING_OPS[scaling], name, params))
    return steps


def recommend_preprocessing(
    profile: ColumnProfile,
    context: RecommendContext | None = None,
    model: GbmModel | None = None,
) -> list[StepRecord]:
    """Ordered preparation steps for one profiled column."""
    context = context or RecommendContext()
    if model is not None:
        return _model_steps(profile, context, model)
    return _rule_steps(profile, context)
