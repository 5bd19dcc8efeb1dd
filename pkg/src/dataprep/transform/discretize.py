"""Numeric discretization into labeled ordinal bins."""

from __future__ import annotations

from ..errors import NonNumeric, UnsortedEdges
from ..tabular import MISSING, Column, VariableType


def _fmt(x: float) -> str:
    return f"{x:g}"


def discretize(c: Column, edges: list[float]) -> Column:
    """Bins "[lo,hi)" with the final bin closed; out-of-range cells become
    MISSING. Output is ordinal with the bin order."""
    if not c.vtype.is_numeric:
        raise NonNumeric(f"discretize needs a numeric column, {c.name!r} is {c.vtype.value}")
    if len(edges) < 2 or any(a >= b for a, b in zip(edges, edges[1:])):
        raise UnsortedEdges(f"edges must be strictly ascending, got {edges}")
    labels = []
    for i in range(len(edges) - 1):
        closer = "]" if i == len(edges) - 2 else ")"
        labels.append(f"[{_fmt(edges[i])},{_fmt(edges[i + 1])}{closer}")

    def bin_of(value: float):
        if value < edges[0] or value > edges[-1]:
            return MISSING
        for i in range(len(edges) - 1):
            if value < edges[i + 1]:
                return labels[i]
        return labels[-1]  # value == last edge (closed)

    cells = tuple(MISSING if cell is MISSING else bin_of(cell) for cell in c.cells)
    return Column(
        name=c.name,
        vtype=VariableType.ORDINAL,
        cells=cells,
        ordinal_order=tuple(labels),
    )
