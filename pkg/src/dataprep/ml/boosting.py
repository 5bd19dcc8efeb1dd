"""Stagewise squared-loss gradient boosting over shallow regression trees."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tree import DecisionTree
from .validation import check_array, check_matching_length


@dataclass
class GradientBoostedRegressor:
    """Least-squares boosting: F_m = F_{m-1} + lr * tree(residual)."""

    n_rounds: int = 50
    learning_rate: float = 0.1
    max_depth: int = 3
    min_samples_leaf: int = 1

    base_: float = field(init=False, default=0.0)
    trees_: list[DecisionTree] = field(init=False, repr=False, default_factory=list)
    loss_history_: list[float] = field(init=False, repr=False, default_factory=list)

    def get_params(self) -> dict:
        return {
            "n_rounds": self.n_rounds,
            "learning_rate": self.learning_rate,
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
        }

    def fit(self, X, y) -> "GradientBoostedRegressor":
        X = check_array(X, allow_1d=True)
        y = np.asarray(y, dtype=np.float64)
        check_matching_length(X, y)
        self.base_ = float(y.mean())
        current = np.full(len(y), self.base_)
        self.trees_ = []
        self.loss_history_ = [float(np.mean((y - current) ** 2))]
        for _ in range(self.n_rounds):
            residual = y - current
            tree = DecisionTree(
                criterion="variance",
                max_depth=self.max_depth,
                min_samples_leaf=self.min_samples_leaf,
            )
            tree.fit(X, residual)
            current = current + self.learning_rate * tree.predict(X)
            loss = float(np.mean((y - current) ** 2))
            if loss > self.loss_history_[-1] + 1e-12:
                raise AssertionError(
                    f"boosting loss increased: {self.loss_history_[-1]} -> {loss}"
                )
            self.loss_history_.append(loss)
            self.trees_.append(tree)
        return self

    def predict(self, X) -> np.ndarray:
        X = check_array(X, allow_1d=True)
        out = np.full(len(X), self.base_)
        for tree in self.trees_:
            out += self.learning_rate * tree.predict(X)
        return out
