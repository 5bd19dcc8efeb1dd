"""Plot-type recommendation: rule fallback plus a trainable linear SVM.

The SVM consumes one-hot encodings of coarse meta-features (variable types,
distribution shapes, relation label, correlation bucket). A small curated
meta-dataset ships with the engine for out-of-the-box recommendations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import SingleClass
from ..ml import LinearSvmClassifier
from ..tabular import VariableType
from .pairs import PairProfile, RelationLabel
from .profiles import ColumnProfile, DistributionShape


class PlotType(str, Enum):
    SCATTER_PLOT = "scatter_plot"
    BAR_CHART = "bar_chart"
    VIOLIN_PLOT = "violin_plot"
    LINE_GRAPH = "line_graph"
    PIE_CHART = "pie_chart"
    HISTOGRAM = "histogram"
    BOX_PLOT = "box_plot"
    HEATMAP = "heatmap"
    ALLUVIAL_PLOT = "alluvial_plot"


class CorrBucket(str, Enum):
    HIGH_POSITIVE = "high_positive"
    HIGH_NEGATIVE = "high_negative"
    LOW_OR_NA = "low_or_na"


#: documented one-hot orders; changing these changes model weights
META_VTYPES = ("categorical", "continuous", "ordinal")
META_SHAPES = tuple(s.value for s in DistributionShape)
META_RELATIONS = tuple(r.value for r in RelationLabel)
META_CORR = tuple(c.value for c in CorrBucket)


@dataclass(frozen=True)
class PlotMetaRow:
    """One curated training example for the plot recommender.

    The two trailing fields are reserved optional meta-features with no
    established vocabulary; they default to absent and are not encoded.
    """

    v1_type: str
    v1_shape: str
    v2_type: str
    v2_shape: str
    relation: str
    corr_bucket: str
    label: PlotType
    mode_of_relationship: str | None = None
    covariance_bucket: str | None = None


def builtin_plot_meta_rows() -> list[PlotMetaRow]:
    """Curated example meta-dataset shipped with the engine."""
    rows = [
        ("continuous", "normal", "continuous", "skewed_right", "positive_linear", "high_positive", PlotType.SCATTER_PLOT),
        ("categorical", "binary", "categorical", "varied", "no_relation", "low_or_na", PlotType.BAR_CHART),
        ("categorical", "varied", "continuous", "normal", "positive_relation", "low_or_na", PlotType.VIOLIN_PLOT),
        ("continuous", "normal", "continuous", "skewed_right", "positive_linear", "high_positive", PlotType.SCATTER_PLOT),
        ("ordinal", "varied", "categorical", "binary", "no_relation", "low_or_na", PlotType.BAR_CHART),
        ("continuous", "normal", "continuous", "normal", "negative_linear", "high_negative", PlotType.LINE_GRAPH),
        ("categorical", "varied", "continuous", "varied", "no_clear_relation", "low_or_na", PlotType.PIE_CHART),
        ("categorical", "varied", "continuous", "skewed_right", "positive_relation", "low_or_na", PlotType.BAR_CHART),
    ]
    return [PlotMetaRow(*r) for r in rows]


def _one_hot(value: str, vocabulary: tuple[str, ...]) -> list[float]:
    return [1.0 if value == v else 0.0 for v in vocabulary]


def encode_meta_features(row: PlotMetaRow) -> np.ndarray:
    vec = (
        _one_hot(row.v1_type, META_VTYPES)
        + _one_hot(row.v1_shape, META_SHAPES)
        + _one_hot(row.v2_type, META_VTYPES)
        + _one_hot(row.v2_shape, META_SHAPES)
        + _one_hot(row.relation, META_RELATIONS)
        + _one_hot(row.corr_bucket, META_CORR)
    )
    return np.array(vec)


META_FEATURE_DIM = 2 * len(META_VTYPES) + 2 * len(META_SHAPES) + len(META_RELATIONS) + len(META_CORR)


@dataclass
class SvmConfig:
    learning_rate: float = 0.1
    epochs: int = 1000
    reg_lambda: float = 1e-4


@dataclass
class PlotSvmModel:
    """One-vs-rest linear SVM over encoded meta-features."""

    config: SvmConfig
    classifier: LinearSvmClassifier = field(repr=False, default=None)

    @property
    def classes(self) -> list[PlotType]:
        return [PlotType(c) for c in self.classifier.classes_]

    def decision_margins(self, row: PlotMetaRow) -> np.ndarray:
        x = encode_meta_features(row).reshape(1, -1)
        return self.classifier.decision_function(x)[0]

    def predict_row(self, row: PlotMetaRow) -> PlotType:
        margins = self.decision_margins(row)
        return PlotType(self.classifier.classes_[int(np.argmax(margins))])


def train_plot_svm(rows: list[PlotMetaRow], config: SvmConfig | None = None) -> PlotSvmModel:
    if not rows:
        raise SingleClass("no training rows")
    config = config or SvmConfig()
    X = np.array([encode_meta_features(r) for r in rows])
    y = np.array([r.label.value for r in rows])
    clf = LinearSvmClassifier(
        learning_rate=config.learning_rate,
        epochs=config.epochs,
        reg_lambda=config.reg_lambda,
    ).fit(X, y)
    return PlotSvmModel(config=config, classifier=clf)


@dataclass(frozen=True)
class PlotRecommendation:
    plot_type: PlotType
    source: str  # "rule" | "svm"
    score: float

    def to_dict(self) -> dict:
        return {"plot_type": self.plot_type.value, "source": self.source, "score": self.score}


def _meta_vtype(vt: VariableType) -> str:
    if vt is VariableType.ORDINAL:
        return "ordinal"
    if vt.is_numeric:
        return "continuous"
    return "categorical"


def _corr_bucket(r: float | None) -> str:
    if r is None:
        return CorrBucket.LOW_OR_NA.value
    if r >= 0.6:
        return CorrBucket.HIGH_POSITIVE.value
    if r <= -0.6:
        return CorrBucket.HIGH_NEGATIVE.value
    return CorrBucket.LOW_OR_NA.value


def _rule_plot(p1: ColumnProfile, p2: ColumnProfile | None) -> PlotType:
    one_numeric = p1.vtype.is_numeric
    if p2 is None:
        return PlotType.HISTOGRAM if one_numeric else PlotType.BAR_CHART
    two_numeric = p2.vtype.is_numeric
    if one_numeric and two_numeric:
        return PlotType.SCATTER_PLOT
    if one_numeric != two_numeric:
        return PlotType.VIOLIN_PLOT
    return PlotType.BAR_CHART


def profile_to_meta_row(
    p1: ColumnProfile, p2: ColumnProfile, pair: PairProfile
) -> PlotMetaRow:
    return PlotMetaRow(
        v1_type=_meta_vtype(p1.vtype),
        v1_shape=p1.shape.value,
        v2_type=_meta_vtype(p2.vtype),
        v2_shape=p2.shape.value,
        relation=pair.relation.value,
        corr_bucket=_corr_bucket(pair.pearson_r),
        label=PlotType.HISTOGRAM,  # placeholder, unused for prediction
    )


def recommend_plot(
    p1: ColumnProfile,
    p2: ColumnProfile | None = None,
    pair: PairProfile | None = None,
    model: PlotSvmModel | None = None,
) -> PlotRecommendation:
    """Pick the plot type for one or two profiled variables.

    The SVM path applies to variable pairs when a model is supplied;
    single-variable recommendations are always rule-based. Exact margin ties
    prefer the rule answer, then the lexicographically first plot name.
    """
    if (p2 is None) != (pair is None):
        raise ValueError("pair profile must be supplied iff a second column is")
    rule_answer = _rule_plot(p1, p2)
    if model is None or p2 is None:
        return PlotRecommendation(plot_type=rule_answer, source="rule", score=1.0)

    row = profile_to_meta_row(p1, p2, pair)
    margins = model.decision_margins(row)
    best = float(np.max(margins))
    tied = [PlotType(model.classifier.classes_[i]) for i in np.flatnonzero(margins == best)]
    if len(tied) == 1:
        choice = tied[0]
    elif rule_answer in tied:
        choice = rule_answer
    else:
        choice = min(tied, key=lambda p: p.value)
    score = 1.0 / (1.0 + math.exp(-best))
    return PlotRecommendation(plot_type=choice, source="svm", score=score)
