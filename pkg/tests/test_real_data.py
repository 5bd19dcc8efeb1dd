"""Optional checks against real datasets the user supplies.

Set DATAPREP_HOUSE_PRICES_CSV to the path of the real home-sale training CSV
(1460 rows x 81 columns including Id) to run the rank-order check; the suite
skips it otherwise.
"""

import os

import pytest

from dataprep.mining import ForestConfig, rank_features
from dataprep.tabular import load_csv

REAL_HOUSE = os.environ.get("DATAPREP_HOUSE_PRICES_CSV")


@pytest.mark.skipif(not REAL_HOUSE, reason="real dataset not supplied")
def test_real_house_prices_top3_features():
    d, _ = load_csv(REAL_HOUSE)
    ranking = rank_features(d.drop_column("Id") if d.has_column("Id") else d,
                            "SalePrice", ForestConfig(seed=0))
    top3 = {name for name, _ in ranking.entries[:3]}
    assert top3 == {"BsmtUnfSF", "1stFlrSF", "GrLivArea"}
