"""One-vs-rest linear SVM trained by full-batch hinge subgradient descent.

Full-batch updates from a zero initialization make training exactly
reproducible: no sample shuffling, no random init. Training stops early once
multiclass training accuracy reaches 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import SingleClass
from .validation import check_array, check_matching_length


@dataclass
class LinearSvmClassifier:
    learning_rate: float = 0.1
    epochs: int = 1000
    reg_lambda: float = 1e-4

    classes_: np.ndarray = field(init=False, repr=False, default=None)
    weights_: np.ndarray = field(init=False, repr=False, default=None)  # (k, d)
    bias_: np.ndarray = field(init=False, repr=False, default=None)  # (k,)
    epochs_run_: int = field(init=False, default=0)

    def get_params(self) -> dict:
        return {
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "reg_lambda": self.reg_lambda,
        }

    def fit(self, X, y) -> "LinearSvmClassifier":
        X = check_array(X, allow_1d=True)
        y = np.asarray(y)
        check_matching_length(X, y)
        self.classes_ = np.unique(y)
        if len(self.classes_) < 2:
            raise SingleClass("training data has a single class")
        k, (n, d) = len(self.classes_), X.shape
        targets = np.where(y[None, :] == self.classes_[:, None], 1.0, -1.0)  # (k, n)
        W = np.zeros((k, d))
        b = np.zeros(k)
        for epoch in range(self.epochs):
            margins = targets * (W @ X.T + b[:, None])  # (k, n)
            violating = margins < 1.0
            coef = np.where(violating, targets, 0.0)
            grad_w = self.reg_lambda * W - (coef @ X) / n
            grad_b = -coef.sum(axis=1) / n
            W -= self.learning_rate * grad_w
            b -= self.learning_rate * grad_b
            self.epochs_run_ = epoch + 1
            scores = W @ X.T + b[:, None]
            if np.all(self.classes_[np.argmax(scores, axis=0)] == y):
                break
        self.weights_, self.bias_ = W, b
        return self

    def decision_function(self, X) -> np.ndarray:
        """Per-class margins, shape (n, k) in classes_ order."""
        X = check_array(X, allow_1d=True)
        return (self.weights_ @ X.T + self.bias_[:, None]).T

    def predict(self, X) -> np.ndarray:
        scores = self.decision_function(X)
        return self.classes_[np.argmax(scores, axis=1)]
