"""Random forests with impurity-decrease feature importances."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tree import DecisionTree
from .validation import check_array, check_matching_length, check_random_state


@dataclass
class RandomForest:
    """Bagged trees; criterion "variance" (regression) or "gini"."""

    criterion: str = "variance"
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_leaf: int = 1
    max_features: int | str | None = "sqrt"
    bootstrap: bool = True
    random_state: int | None = 0

    trees_: list[DecisionTree] = field(init=False, repr=False, default_factory=list)
    feature_importances_: np.ndarray = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {
            "criterion": self.criterion,
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
            "max_features": self.max_features,
            "bootstrap": self.bootstrap,
            "random_state": self.random_state,
        }

    def fit(self, X, y) -> "RandomForest":
        X = check_array(X, allow_1d=True)
        y = np.asarray(y)
        check_matching_length(X, y)
        rng = check_random_state(self.random_state)
        n = len(y)
        self.trees_ = []
        raw = np.zeros(X.shape[1])
        for _ in range(self.n_trees):
            tree_seed = int(rng.integers(0, 2**31 - 1))
            idx = (
                np.random.default_rng(tree_seed).integers(0, n, size=n)
                if self.bootstrap
                else np.arange(n)
            )
            tree = DecisionTree(
                criterion=self.criterion,
                max_depth=self.max_depth,
                min_samples_leaf=self.min_samples_leaf,
                max_features=self.max_features,
                random_state=tree_seed + 1,
            )
            tree.fit(X[idx], y[idx])
            self.trees_.append(tree)
            raw += tree.feature_importances_raw_
        total = raw.sum()
        self.feature_importances_ = raw / total if total > 0 else np.zeros_like(raw)
        return self

    def predict(self, X) -> np.ndarray:
        X = check_array(X, allow_1d=True)
        if self.criterion == "gini":
            proba = np.mean([t.predict_proba(X) for t in self.trees_], axis=0)
            return np.argmax(proba, axis=1)
        return np.mean([t.predict(X) for t in self.trees_], axis=0)
