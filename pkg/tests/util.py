"""Small builders shared across test modules."""

from dataprep.tabular import MISSING, Column, Dataset, VariableType


def num_col(name, values) -> Column:
    cells = tuple(MISSING if v is None else float(v) for v in values)
    return Column(name=name, vtype=VariableType.CONTINUOUS, cells=cells)


def cat_col(name, values, order=None, vtype=None) -> Column:
    cells = tuple(MISSING if v is None else str(v) for v in values)
    if order is not None:
        return Column(
            name=name, vtype=VariableType.ORDINAL, cells=cells, ordinal_order=tuple(order)
        )
    return Column(name=name, vtype=vtype or VariableType.NOMINAL, cells=cells)


def text_col(name, values) -> Column:
    cells = tuple(MISSING if v is None else str(v) for v in values)
    return Column(name=name, vtype=VariableType.TEXT, cells=cells)


def dataset(*columns, name="test") -> Dataset:
    return Dataset(name=name, columns=tuple(columns))
