"""Lloyd's k-means with k-means++ seeding."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import KTooLarge
from .validation import check_array, check_random_state, pairwise_sq_distances


@dataclass
class KMeansResult:
    assignments: np.ndarray
    centroids: np.ndarray
    wcss: float
    n_iterations: int
    wcss_history: list[float]


@dataclass
class KMeans:
    k: int = 2
    max_iter: int = 300
    random_state: int | None = 0

    result_: KMeansResult = field(init=False, repr=False, default=None)

    def get_params(self) -> dict:
        return {"k": self.k, "max_iter": self.max_iter, "random_state": self.random_state}

    def _init_centroids(self, X, rng) -> np.ndarray:
        """k-means++ D^2 seeding; zero-mass fallback picks lowest unused index."""
        n = len(X)
        chosen = [int(rng.integers(0, n))]
        d2 = pairwise_sq_distances(X, X[chosen])[:, 0]
        while len(chosen) < self.k:
            total = d2.sum()
            if total <= 0.0:
                nxt = next(i for i in range(n) if i not in set(chosen))
            else:
                nxt = int(rng.choice(n, p=d2 / total))
            chosen.append(nxt)
            d2 = np.minimum(d2, pairwise_sq_distances(X, X[[nxt]])[:, 0])
        return X[chosen].copy()

    def fit(self, points) -> "KMeans":
        X = check_array(points)
        n = len(X)
        if self.k < 1 or self.k > n:
            raise KTooLarge(f"k={self.k} with {n} points")
        rng = check_random_state(self.random_state)
        centroids = self._init_centroids(X, rng)
        assignments = np.full(n, -1, dtype=np.int64)
        history: list[float] = []
        iterations = 0
        for _ in range(self.max_iter):
            iterations += 1
            d2 = pairwise_sq_distances(X, centroids)
            new_assign = np.argmin(d2, axis=1)
            wcss = float(d2[np.arange(n), new_assign].sum())
            if history and wcss > history[-1] + 1e-9:
                raise AssertionError(f"WCSS increased: {history[-1]} -> {wcss}")
            history.append(wcss)
            if np.array_equal(new_assign, assignments):
                break
            assignments = new_assign
            for c in range(self.k):
                members = X[assignments == c]
                if len(members):
                    centroids[c] = members.mean(axis=0)
                else:
                    # Re-seed an empty cluster at the point farthest from its centroid.
                    dist_own = d2[np.arange(n), assignments]
                    far = int(np.argmax(dist_own))
                    centroids[c] = X[far]
                    assignments[far] = c
        # Direct subtraction keeps the k == n case exactly zero.
        wcss = float(((X - centroids[assignments]) ** 2).sum())
        self.result_ = KMeansResult(
            assignments=assignments,
            centroids=centroids,
            wcss=wcss,
            n_iterations=iterations,
            wcss_history=history,
        )
        return self

    def fit_predict(self, points) -> np.ndarray:
        return self.fit(points).result_.assignments


def kmeans(points, k: int, seed: int | None = 0, max_iter: int = 300) -> KMeansResult:
    """Functional wrapper returning assignments, centroids and WCSS."""
    return KMeans(k=k, max_iter=max_iter, random_state=seed).fit(points).result_
