"""Column/pair profiling, clustering order, and plot recommendation."""

from .cluster import hierarchical_order
from .pairs import (
    PairProfile,
    RelationLabel,
    chi_square_independence,
    correlation_matrix,
    one_way_anova,
    pearson,
    profile_pair,
)
from .plots import (
    CorrBucket,
    PlotMetaRow,
    PlotRecommendation,
    PlotSvmModel,
    PlotType,
    SvmConfig,
    builtin_plot_meta_rows,
    encode_meta_features,
    profile_to_meta_row,
    recommend_plot,
    train_plot_svm,
)
from .profiles import (
    ColumnProfile,
    DistributionShape,
    adjusted_skewness,
    excess_kurtosis,
    profile_column,
    sample_std,
    uniformity_pvalue,
)

__all__ = [
    "hierarchical_order",
    "PairProfile",
    "RelationLabel",
    "chi_square_independence",
    "correlation_matrix",
    "one_way_anova",
    "pearson",
    "profile_pair",
    "CorrBucket",
    "PlotMetaRow",
    "PlotRecommendation",
    "PlotSvmModel",
    "PlotType",
    "SvmConfig",
    "builtin_plot_meta_rows",
    "encode_meta_features",
    "profile_to_meta_row",
    "recommend_plot",
    "train_plot_svm",
    "ColumnProfile",
    "DistributionShape",
    "adjusted_skewness",
    "excess_kurtosis",
    "profile_column",
    "sample_std",
    "uniformity_pvalue",
]
