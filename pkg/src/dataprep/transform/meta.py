"""Meta-dataset vocabulary for the preprocessing recommender.

Each row describes one variable's profile (inputs) and the preparation steps
applied to it (labels). A small curated set ships with the engine; one of its
rows came from a source with misaligned trailing fields and is ingested with
analysis_type unset and a flag rather than guessed values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

#: model input fields, in encoding order; cardinality and data_scope are
#: optional meta-features that encode as "unset" when absent
INPUT_FIELDS = (
    "original_distribution",
    "analysis_type",
    "variable_nature",
    "scale_of_measurement",
    "cardinality",
    "data_scope",
)

#: model output fields (one ensemble per field)
LABEL_FIELDS = (
    "missing_value_handling",
    "transformation",
    "feature_scaling",
    "outlier_treatment",
)

MISSING_HANDLING_VOCAB = ("none", "mean", "median", "mode")
TRANSFORMATION_VOCAB = (
    "none",
    "frequency_encoding",
    "label_encoding",
    "one_hot_encoding",
    "discretization",
    "square",
    "boxcox",
)
SCALING_VOCAB = ("none", "minmax", "zscore")


@dataclass(frozen=True)
class PreprocMetaRow:
    name: str
    original_distribution: str
    missing_value_handling: str
    transformation: str
    feature_scaling: str
    new_distribution: str
    analysis_type: str | None
    outlier_treatment: bool
    variable_nature: str
    scale_of_measurement: str
    cardinality: str | None = None
    data_scope: str | None = None
    flags: tuple[str, ...] = field(default_factory=tuple)

    def inputs(self) -> dict[str, str]:
        return {
            "original_distribution": self.original_distribution,
            "analysis_type": self.analysis_type or "unset",
            "variable_nature": self.variable_nature,
            "scale_of_measurement": self.scale_of_measurement,
            "cardinality": self.cardinality or "unset",
            "data_scope": self.data_scope or "unset",
        }

    def labels(self) -> dict[str, str]:
        return {
            "missing_value_handling": self.missing_value_handling,
            "transformation": self.transformation,
            "feature_scaling": self.feature_scaling,
            "outlier_treatment": "yes" if self.outlier_treatment else "no",
        }


def builtin_preproc_meta_rows() -> list[PreprocMetaRow]:
    """Curated example rows shipped with the engine."""
    return [
        PreprocMetaRow(
            name="City",
            original_distribution="categorical_100plus",
            missing_value_handling="none",
            transformation="frequency_encoding",
            feature_scaling="none",
            new_distribution="varied_fewer_categories",
            analysis_type="any",
            outlier_treatment=False,
            variable_nature="predictor",
            scale_of_measurement="nominal",
            cardinality="high",
        ),
        PreprocMetaRow(
            name="Gender",
            original_distribution="categorical_binary",
            missing_value_handling="none",
            transformation="label_encoding",
            feature_scaling="none",
            new_distribution="binary",
            analysis_type="any",
            outlier_treatment=False,
            variable_nature="predictor",
            scale_of_measurement="nominal",
            cardinality="low",
        ),
        PreprocMetaRow(
            # Source row had misaligned trailing fields; analysis type unknown.
            name="Income",
            original_distribution="continuous_wide_range",
            missing_value_handling="median",
            transformation="none",
            feature_scaling="minmax",
            new_distribution="continuous",
            analysis_type=None,
            outlier_treatment=True,
            variable_nature="target",
            scale_of_measurement="ratio",
            cardinality="high",
            flags=("misaligned_source_row",),
        ),
        PreprocMetaRow(
            name="Age",
            original_distribution="continuous",
            missing_value_handling="none",
            transformation="discretization",
            feature_scaling="none",
            new_distribution="categorical",
            analysis_type="classification",
            outlier_treatment=False,
            variable_nature="predictor",
            scale_of_measurement="ratio",
            cardinality="high",
        ),
        PreprocMetaRow(
            name="Product_Type",
            original_distribution="categorical_many",
            missing_value_handling="mode",
            transformation="one_hot_encoding",
            feature_scaling="none",
            new_distribution="multiple_binary",
            analysis_type="any",
            outlier_treatment=False,
            variable_nature="predictor",
            scale_of_measurement="nominal",
            cardinality="med",
        ),
        PreprocMetaRow(
            name="Experience",
            original_distribution="left_skewed",
            missing_value_handling="mean",
            transformation="square",
            feature_scaling="none",
            new_distribution="approximate_normal",
            analysis_type="any",
            outlier_treatment=True,
            variable_nature="predictor",
            scale_of_measurement="ratio",
            cardinality="high",
        ),
        PreprocMetaRow(
            name="Salary",
            original_distribution="very_wide_range",
            missing_value_handling="none",
            transformation="none",
            feature_scaling="minmax",
            new_distribution="range_0_1",
            analysis_type="regression",
            outlier_treatment=True,
            variable_nature="target",
            scale_of_measurement="ratio",
            cardinality="high",
        ),
        PreprocMetaRow(
            name="Height",
            original_distribution="slightly_left_skewed",
            missing_value_handling="none",
            transformation="none",
            feature_scaling="zscore",
            new_distribution="normal",
            analysis_type="any",
            outlier_treatment=True,
            variable_nature="predictor",
            scale_of_measurement="ratio",
            cardinality="high",
        ),
    ]
