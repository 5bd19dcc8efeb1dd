"""Shared fixtures: the bundled synthetic datasets, parsed once per run."""

import pytest

from dataprep.fixtures import air_quality_like_csv, house_prices_like_csv
from dataprep.tabular import parse_csv


@pytest.fixture(scope="session")
def house_csv() -> bytes:
    return house_prices_like_csv(seed=0)


@pytest.fixture(scope="session")
def air_csv() -> bytes:
    return air_quality_like_csv(seed=0)


@pytest.fixture(scope="session")
def house_dataset(house_csv):
    d, report = parse_csv(house_csv, name="house")
    return d, report


@pytest.fixture(scope="session")
def air_dataset(air_csv):
    d, report = parse_csv(air_csv, name="air")
    return d, report
