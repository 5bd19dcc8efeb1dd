"""Local outlier factor with tie-inclusive k-neighborhoods.

Conventions (shared by the brute-force test oracle):

- N_k(p) = every q != p with d(p, q) <= k-distance(p); duplicates make the
  neighborhood larger than k.
- reach_k(p, o) = max(k-distance(o), d(p, o)).
- lrd(p) = 1 / (mean reach distance + 1e-10); the epsilon keeps duplicate
  neighborhoods finite, and identical neighborhoods still give LOF exactly 1.
- LOF(p) = mean of lrd(o) / lrd(p) over o in N_k(p).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import KTooLarge
from .neighbors import tie_inclusive_knn
from .validation import check_array

LRD_EPSILON = 1e-10


@dataclass
class LocalOutlierFactor:
    k: int = 20
    score_threshold: float = 1.5

    scores_: np.ndarray = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {"k": self.k, "score_threshold": self.score_threshold}

    def fit_score(self, points) -> np.ndarray:
        X = check_array(points)
        n = len(X)
        if n <= self.k:
            raise KTooLarge(f"LOF needs more than k={self.k} points, got {n}")
        kdist, neighbors, distances = tie_inclusive_knn(X, self.k)
        lrd = np.empty(n)
        for i in range(n):
            reach = np.maximum(kdist[neighbors[i]], distances[i])
            lrd[i] = 1.0 / (reach.mean() + LRD_EPSILON)
        scores = np.empty(n)
        for i in range(n):
            scores[i] = float(np.mean(lrd[neighbors[i]] / lrd[i]))
        self.scores_ = scores
        return scores
