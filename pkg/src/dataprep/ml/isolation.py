"""Isolation forest anomaly scores.

Score of a point is 2^(-E[h(x)] / c(psi)) where h is the isolation path
length, psi the per-tree subsample size and c() the average unsuccessful
BST search length; scores always fall in (0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import TooFewPoints
from .validation import check_array, check_random_state

_EULER_GAMMA = 0.5772156649015329


def average_path_length(n: int) -> float:
    """c(n): expected unsuccessful-search path length in a BST of n points."""
    if n <= 1:
        return 0.0
    if n == 2:
        return 1.0
    h = math.log(n - 1.0) + _EULER_GAMMA
    return 2.0 * h - 2.0 * (n - 1.0) / n


@dataclass
class _ITreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "_ITreeNode | None" = None
    right: "_ITreeNode | None" = None
    size: int = 0  # training points at a truncated external node


def _build_itree(X, idx, depth, max_depth, rng) -> _ITreeNode:
    if depth >= max_depth or len(idx) <= 1:
        return _ITreeNode(size=len(idx))
    sub = X[idx]
    lo, hi = sub.min(axis=0), sub.max(axis=0)
    valid = np.flatnonzero(hi > lo)
    if len(valid) == 0:
        return _ITreeNode(size=len(idx))
    f = int(valid[rng.integers(0, len(valid))])
    t = float(rng.uniform(lo[f], hi[f]))
    mask = sub[:, f] < t
    if not mask.any() or mask.all():
        return _ITreeNode(size=len(idx))
    return _ITreeNode(
        feature=f,
        threshold=t,
        left=_build_itree(X, idx[mask], depth + 1, max_depth, rng),
        right=_build_itree(X, idx[~mask], depth + 1, max_depth, rng),
    )


def _path_lengths(node: _ITreeNode, X, idx, depth, out):
    if node.feature < 0:
        out[idx] = depth + average_path_length(node.size)
        return
    mask = X[idx, node.feature] < node.threshold
    _path_lengths(node.left, X, idx[mask], depth + 1, out)
    _path_lengths(node.right, X, idx[~mask], depth + 1, out)


@dataclass
class IsolationForest:
    n_trees: int = 100
    subsample: int = 256
    random_state: int | None = 0
    score_threshold: float = 0.6

    scores_: np.ndarray = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {
            "n_trees": self.n_trees,
            "subsample": self.subsample,
            "random_state": self.random_state,
            "score_threshold": self.score_threshold,
        }

    def fit_score(self, points) -> np.ndarray:
        X = check_array(points)
        n = len(X)
        if n < 2:
            raise TooFewPoints("isolation forest needs at least 2 points")
        rng = check_random_state(self.random_state)
        psi = min(self.subsample, n)
        max_depth = int(math.ceil(math.log2(max(psi, 2))))
        depths = np.zeros(n)
        for _ in range(self.n_trees):
            sample = (
                rng.choice(n, size=psi, replace=False) if psi < n else np.arange(n)
            )
            tree = _build_itree(X, sample, 0, max_depth, rng)
            lengths = np.zeros(n)
            _path_lengths(tree, X, np.arange(n), 0, lengths)
            depths += lengths
        mean_depth = depths / self.n_trees
        self.scores_ = np.power(2.0, -mean_depth / average_path_length(psi))
        return self.scores_
