"""Column ordering for correlation heatmaps via agglomerative clustering."""

from __future__ import annotations

import numpy as np


def hierarchical_order(matrix) -> list[int]:
    """Leaf order of an average-linkage dendrogram on distance 1 - |r|.

    Ties break toward the pair containing the smallest column index; when two
    clusters merge, the one whose smallest member index is lower sits on the
    left. An all-zero off-diagonal matrix therefore preserves input order.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("correlation matrix must be square")
    if not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("correlation matrix must be symmetric")
    n = m.shape[0]
    if n == 0:
        return []
    if n == 1:
        return [0]

    dist = 1.0 - np.abs(m)
    # cluster id = smallest original index among members
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    leaves: dict[int, list[int]] = {i: [i] for i in range(n)}

    def average_distance(a: int, b: int) -> float:
        total = 0.0
        for i in members[a]:
            for j in members[b]:
                total += dist[i, j]
        return total / (len(members[a]) * len(members[b]))

    while len(members) > 1:
        ids = sorted(members)
        best = None
        for ai in range(len(ids)):
            for bi in range(ai + 1, len(ids)):
                a, b = ids[ai], ids[bi]
                d = average_distance(a, b)
                key = (d, a, b)
                if best is None or key < best:
                    best = key
        _, a, b = best
        members[a] = members[a] + members[b]
        leaves[a] = leaves[a] + leaves[b]
        del members[b], leaves[b]

    (order,) = leaves.values()
    return order
