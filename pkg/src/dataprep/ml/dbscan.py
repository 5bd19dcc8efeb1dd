"""Density-based clustering with noise (classic region-query algorithm).

Labels are deterministic: points are visited in ascending index order and
clusters expand breadth-first through sorted neighbor lists, so the same
points always produce the same partition and the same noise set regardless
of how the caller ordered prior operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyInput
from .neighbors import kth_distances, radius_neighbors
from .validation import check_array

NOISE = -1
_UNVISITED = -2


@dataclass
class Dbscan:
    eps: float = 0.5
    min_pts: int = 5

    labels_: np.ndarray = field(init=False, repr=False, default=None)
    core_mask_: np.ndarray = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {"eps": self.eps, "min_pts": self.min_pts}

    def fit(self, points) -> "Dbscan":
        X = check_array(points)
        if len(X) == 0:
            raise EmptyInput("no points")
        if self.eps <= 0:
            raise ValueError("eps must be > 0")
        neighborhoods = radius_neighbors(X, self.eps)
        # Neighbor counts include the point itself.
        core = np.array([len(nb) >= self.min_pts for nb in neighborhoods])
        labels = np.full(len(X), _UNVISITED, dtype=np.int64)
        cluster = 0
        for i in range(len(X)):
            if labels[i] != _UNVISITED or not core[i]:
                continue
            labels[i] = cluster
            queue = deque([i])
            while queue:
                p = queue.popleft()
                if not core[p]:
                    continue  # border points never expand
                for q in neighborhoods[p]:
                    if labels[q] == _UNVISITED:
                        labels[q] = cluster
                        queue.append(q)
            cluster += 1
        labels[labels == _UNVISITED] = NOISE
        self.labels_ = labels
        self.core_mask_ = core
        return self

    def fit_predict(self, points) -> np.ndarray:
        return self.fit(points).labels_


def estimate_eps(points, k: int, max_curve_points: int = 5000) -> float:
    """Default eps: knee of the sorted k-distance curve.

    The knee is the point of maximum discrete second difference of the
    ascending curve. On more than `max_curve_points` points the curve is
    computed on a deterministic stride subsample.
    """
    X = check_array(points)
    n = len(X)
    if n <= k:
        k = max(1, n - 1)
    if n < 2:
        return 1.0
    if n > max_curve_points:
        stride = int(np.ceil(n / max_curve_points))
        sample = X[::stride]
    else:
        sample = X
    curve = np.sort(kth_distances(sample, k))
    if len(curve) < 3:
        eps = float(curve[-1])
    else:
        second = curve[2:] - 2.0 * curve[1:-1] + curve[:-2]
        knee = int(np.argmax(second)) + 1
        eps = float(curve[knee])
    if eps <= 0.0:
        positive = curve[curve > 0]
        eps = float(positive[0]) if len(positive) else 1e-12
    return eps
