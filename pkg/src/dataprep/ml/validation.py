"""Input-validation helpers shared by the estimators in this subpackage."""

from __future__ import annotations

import numpy as np

from ..errors import DimensionMismatch, NonFinite


def check_array(points, *, allow_1d: bool = False, name: str = "X") -> np.ndarray:
    """Coerce input to a 2-D float64 array of finite values."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim == 1:
        if not allow_1d:
            raise DimensionMismatch(f"{name} must be 2-D, got 1-D")
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got {arr.ndim}-D")
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains NaN or infinite values")
    return arr


def check_matching_length(X: np.ndarray, y: np.ndarray):
    if len(X) != len(y):
        raise DimensionMismatch(f"X has {len(X)} rows but y has {len(y)}")


def check_random_state(seed) -> np.random.Generator:
    """Seed or Generator -> Generator (deterministic for a given seed)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def pairwise_sq_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances, shape (len(a), len(b))."""
    aa = np.sum(a * a, axis=1)[:, None]
    bb = np.sum(b * b, axis=1)[None, :]
    sq = aa + bb - 2.0 * (a @ b.T)
    np.maximum(sq, 0.0, out=sq)
    return sq


def pairwise_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.sqrt(pairwise_sq_distances(a, b))
