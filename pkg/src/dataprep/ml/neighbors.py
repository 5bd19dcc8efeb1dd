"""Chunked exact neighbor computations (memory-bounded brute force)."""

from __future__ import annotations

import numpy as np

from .validation import pairwise_distances

#: target number of floats per distance block (~32 MB)
_BLOCK_BUDGET = 4_000_000


def _chunk_size(n: int) -> int:
    return max(1, _BLOCK_BUDGET // max(n, 1))


def radius_neighbors(X: np.ndarray, eps: float) -> list[np.ndarray]:
    """Indices within eps (inclusive) of each point, self included."""
    n = len(X)
    out: list[np.ndarray] = []
    step = _chunk_size(n)
    for start in range(0, n, step):
        block = pairwise_distances(X[start : start + step], X)
        for row in block:
            out.append(np.flatnonzero(row <= eps))
    return out


def kth_distances(X: np.ndarray, k: int) -> np.ndarray:
    """Distance to the k-th nearest neighbor (self excluded) per point."""
    n = len(X)
    out = np.empty(n)
    step = _chunk_size(n)
    for start in range(0, n, step):
        block = pairwise_distances(X[start : start + step], X)
        for i, row in enumerate(block):
            row = row.copy()
            row[start + i] = np.inf
            out[start + i] = np.partition(row, k - 1)[k - 1]
    return out


def tie_inclusive_knn(X: np.ndarray, k: int):
    """k-distance, neighbor indices and distances with ties included.

    Neighbors of i are every j != i with d(i, j) <= k-distance(i); with
    duplicate points the neighborhood can exceed k.
    """
    n = len(X)
    kdist = np.empty(n)
    neighbors: list[np.ndarray] = []
    distances: list[np.ndarray] = []
    step = _chunk_size(n)
    for start in range(0, n, step):
        block = pairwise_distances(X[start : start + step], X)
        for i, row in enumerate(block):
            row = row.copy()
            row[start + i] = np.inf
            kd = np.partition(row, k - 1)[k - 1]
            kdist[start + i] = kd
            idx = np.flatnonzero(row <= kd)
            neighbors.append(idx)
            distances.append(row[idx])
    return kdist, neighbors, distances
