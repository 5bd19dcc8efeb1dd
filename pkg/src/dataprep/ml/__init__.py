"""From-scratch numeric estimators (fit/predict/transform style)."""

from .boosting import GradientBoostedRegressor
from .dbscan import NOISE, Dbscan, estimate_eps
from .forest import RandomForest
from .isolation import IsolationForest, average_path_length
from .kmeans import KMeans, KMeansResult, kmeans
from .lof import LocalOutlierFactor
from .svm import LinearSvmClassifier
from .tree import DecisionTree
from .validation import (
    check_array,
    check_random_state,
    pairwise_distances,
    pairwise_sq_distances,
)

__all__ = [
    "GradientBoostedRegressor",
    "Dbscan",
    "NOISE",
    "estimate_eps",
    "RandomForest",
    "IsolationForest",
    "average_path_length",
    "KMeans",
    "KMeansResult",
    "kmeans",
    "LocalOutlierFactor",
    "LinearSvmClassifier",
    "DecisionTree",
    "check_array",
    "check_random_state",
    "pairwise_distances",
    "pairwise_sq_distances",
]
