"""Decision trees with exact greedy splits.

One tree class serves both criteria: "variance" (regression, SSE reduction)
and "gini" (classification). Split search is vectorized with prefix sums and
fully deterministic: stable sorts, first-maximum tie-breaks, features scanned
in ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .validation import check_array, check_matching_length, check_random_state


@dataclass
class _Node:
    feature: int = -1
    threshold: float = 0.0
    left: "_Node | None" = None
    right: "_Node | None" = None
    value: np.ndarray | float = 0.0

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def _sse(prefix_sum, prefix_sq, n_left, total, total_sq, n):
    """SSE of left/right children for every split position."""
    left = prefix_sq - prefix_sum**2 / n_left
    n_right = n - n_left
    right = (total_sq - prefix_sq) - (total - prefix_sum) ** 2 / n_right
    return left + right


@dataclass
class DecisionTree:
    """CART-style tree; criterion "variance" or "gini"."""

    criterion: str = "variance"
    max_depth: int | None = None
    min_samples_leaf: int = 1
    max_features: int | str | None = None
    random_state: int | np.random.Generator | None = None

    root_: _Node = field(init=False, repr=False, default=None)
    n_features_: int = field(init=False, default=0)
    n_classes_: int = field(init=False, default=0)
    feature_importances_raw_: np.ndarray = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {
            "criterion": self.criterion,
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
            "max_features": self.max_features,
            "random_state": self.random_state,
        }

    # --- fitting ----------------------------------------------------------

    def fit(self, X, y) -> "DecisionTree":
        X = check_array(X, allow_1d=True)
        y = np.asarray(y)
        check_matching_length(X, y)
        self.n_features_ = X.shape[1]
        self.feature_importances_raw_ = np.zeros(self.n_features_)
        if self.criterion == "gini":
            y = y.astype(np.int64)
            self.n_classes_ = int(y.max()) + 1 if len(y) else 0
        else:
            y = y.astype(np.float64)
            self.n_classes_ = 0
        rng = check_random_state(self.random_state)

        n_sub = self._resolve_max_features()
        self.root_ = _Node()
        stack = [(self.root_, np.arange(len(y)), 0)]
        while stack:
            node, idx, depth = stack.pop()
            node.value = self._leaf_value(y[idx])
            if self.max_depth is not None and depth >= self.max_depth:
                continue
            if len(idx) < 2 * self.min_samples_leaf or len(idx) < 2:
                continue
            feats = self._candidate_features(rng, n_sub)
            split = self._best_split(X, y, idx, feats)
            if split is None:
                continue
            feature, threshold, decrease = split
            self.feature_importances_raw_[feature] += decrease
            mask = X[idx, feature] <= threshold
            left_idx, right_idx = idx[mask], idx[~mask]
            node.feature, node.threshold = feature, threshold
            node.left, node.right = _Node(), _Node()
            stack.append((node.right, right_idx, depth + 1))
            stack.append((node.left, left_idx, depth + 1))
        return self

    def _resolve_max_features(self) -> int:
        if self.max_features is None:
            return self.n_features_
        if self.max_features == "sqrt":
            return max(1, int(np.sqrt(self.n_features_)))
        return min(int(self.max_features), self.n_features_)

    def _candidate_features(self, rng, n_sub) -> np.ndarray:
        if n_sub >= self.n_features_:
            return np.arange(self.n_features_)
        return np.sort(rng.choice(self.n_features_, size=n_sub, replace=False))

    def _leaf_value(self, y):
        if self.criterion == "gini":
            counts = np.bincount(y, minlength=self.n_classes_)
            return counts / counts.sum()
        return float(y.mean())

    def _node_impurity(self, y) -> float:
        n = len(y)
        if self.criterion == "gini":
            counts = np.bincount(y, minlength=self.n_classes_)
            return n - float(counts @ counts) / n
        return float(np.sum(y * y) - y.sum() ** 2 / n)

    def _best_split(self, X, y, idx, feats):
        """Maximal impurity decrease over candidate features/thresholds."""
        yn = y[idx]
        n = len(idx)
        parent = self._node_impurity(yn)
        best = None
        best_dec = 1e-12  # require a strictly positive decrease
        for f in feats:
            x = X[idx, f]
            order = np.argsort(x, kind="mergesort")
            xs = x[order]
            if xs[0] == xs[-1]:
                continue
            ys = yn[order]
            boundary = xs[1:] != xs[:-1]
            n_left = np.arange(1, n)
            valid = boundary & (n_left >= self.min_samples_leaf) & (n - n_left >= self.min_samples_leaf)
            if not valid.any():
                continue
            if self.criterion == "gini":
                onehot = np.zeros((n, self.n_classes_))
                onehot[np.arange(n), ys] = 1.0
                cum = np.cumsum(onehot, axis=0)[:-1]
                total = cum[-1] + onehot[-1]
                left = n_left - np.einsum("ij,ij->i", cum, cum) / n_left
                rcnt = total[None, :] - cum
                n_right = n - n_left
                right = n_right - np.einsum("ij,ij->i", rcnt, rcnt) / n_right
                child = left + right
            else:
                csum = np.cumsum(ys)[:-1]
                csq = np.cumsum(ys * ys)[:-1]
                child = _sse(csum, csq, n_left, ys.sum(), np.sum(ys * ys), n)
            dec = np.where(valid, parent - child, -np.inf)
            pos = int(np.argmax(dec))
            if dec[pos] > best_dec:
                best_dec = float(dec[pos])
                best = (int(f), float((xs[pos] + xs[pos + 1]) / 2.0), best_dec)
        return best

    # --- prediction --------------------------------------------------------

    def _leaf_for(self, x) -> _Node:
        node = self.root_
        while not node.is_leaf:
            node = node.left if x[node.feature] <= node.threshold else node.right
        return node

    def predict(self, X) -> np.ndarray:
        X = check_array(X, allow_1d=True)
        if self.criterion == "gini":
            return np.array([int(np.argmax(self._leaf_for(x).value)) for x in X])
        return np.array([self._leaf_for(x).value for x in X])

    def predict_proba(self, X) -> np.ndarray:
        X = check_array(X, allow_1d=True)
        return np.array([self._leaf_for(x).value for x in X])
