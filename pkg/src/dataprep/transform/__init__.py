"""Encoders, scalers, power transforms, recommender, and propagation."""

from .discretize import discretize
from .embedding import (
    DEFAULT_DISTANCE_THRESHOLD,
    DEFAULT_PROVIDER,
    EMBEDDING_DIM,
    AttributeEmbedding,
    PropagationConfig,
    cosine_distance,
    embed_attribute,
    euclidean_distance,
    propagate_steps,
)
from .encoders import (
    ONE_HOT_CAP,
    EncodingMap,
    frequency_encode,
    label_decode,
    label_encode,
    one_hot_encode,
)
from .gbm import GbmConfig, GbmModel, train_preproc_gbm
from .meta import (
    INPUT_FIELDS,
    LABEL_FIELDS,
    PreprocMetaRow,
    builtin_preproc_meta_rows,
)
from .power import (
    PowerTransformParams,
    apply_boxcox,
    boxcox,
    boxcox_inverse_values,
    boxcox_loglik,
    boxcox_values,
    fit_boxcox_lambda,
    golden_section_maximize,
    invert_boxcox,
    power_transform,
)
from .recommend import (
    RecommendContext,
    meta_inputs_for_profile,
    recommend_preprocessing,
)
from .scalers import ScalerParams, invert_scaler, minmax, zscore

__all__ = [
    "discretize",
    "DEFAULT_DISTANCE_THRESHOLD",
    "DEFAULT_PROVIDER",
    "EMBEDDING_DIM",
    "AttributeEmbedding",
    "PropagationConfig",
    "cosine_distance",
    "embed_attribute",
    "euclidean_distance",
    "propagate_steps",
    "ONE_HOT_CAP",
    "EncodingMap",
    "frequency_encode",
    "label_decode",
    "label_encode",
    "one_hot_encode",
    "GbmConfig",
    "GbmModel",
    "train_preproc_gbm",
    "INPUT_FIELDS",
    "LABEL_FIELDS",
    "PreprocMetaRow",
    "builtin_preproc_meta_rows",
    "PowerTransformParams",
    "apply_boxcox",
    "boxcox",
    "boxcox_inverse_values",
    "boxcox_loglik",
    "boxcox_values",
    "fit_boxcox_lambda",
    "golden_section_maximize",
    "invert_boxcox",
    "power_transform",
    "RecommendContext",
    "meta_inputs_for_profile",
    "recommend_preprocessing",
    "ScalerParams",
    "invert_scaler",
    "minmax",
    "zscore",
]
