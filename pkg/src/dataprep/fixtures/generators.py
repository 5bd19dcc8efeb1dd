"""Seeded synthetic fixture datasets.

Two generators mirror the shapes of well-known public datasets (a home-sale
table with 80 attributes x 1460 rows and a daily air-quality table with 15
attributes x 29531 rows) without shipping any real records. Output is raw
CSV bytes so fingerprints, plans, and exports exercise the same code paths
as user files. Identical seeds give identical bytes.
"""

from __future__ import annotations

import io
import csv
from datetime import date, timedelta

import numpy as np

HOUSE_ROWS = 1460
AIR_ROWS = 29531

_NEIGHBORHOODS = [
    "Names", "Collgcr", "Oldtown", "Edwards", "Somerst", "Gilbert", "Nridght",
    "Sawyer", "Nwames", "Sawyerw", "Brkside", "Crawfor", "Mitchel", "Nohill",
    "Timber", "Idotrr", "Clearcr", "Stonebr", "Swisu", "Blmngtn", "Meadowv",
    "Brdale", "Veenker", "Npkvill", "Blueste",
]
_CONDITIONS = ["Norm", "Feedr", "Artery", "RRAn", "PosN", "RRAe", "PosA", "RRNn", "RRNe"]
_QUALITY = ["Po", "Fa", "TA", "Gd", "Ex"]

_CITIES = [
    "Ahmedabad", "Aizawl", "Amaravati", "Amritsar", "Bengaluru", "Bhopal",
    "Brajrajnagar", "Chandigarh", "Chennai", "Coimbatore", "Delhi",
    "Ernakulam", "Gurugram", "Guwahati", "Hyderabad", "Jaipur", "Jorapokhar",
    "Kochi", "Kolkata", "Lucknow", "Mumbai", "Patna", "Shillong", "Talcher",
    "Thiruvananthapuram", "Visakhapatnam",
]
_AQI_BUCKETS = ["Good", "Satisfactory", "Moderate", "Poor", "Very Poor", "Severe"]


def _fmt(value, decimals=0):
    if decimals == 0:
        return str(int(round(value)))
    return f"{value:.{decimals}f}"


def _choice(rng, values, n, p=None):
    if p is not None:
        p = np.asarray(p, dtype=float)
        p = p / p.sum()
    return rng.choice(values, size=n, p=p)


def house_prices_like_csv(seed: int = 0, rows: int = HOUSE_ROWS) -> bytes:
    """80-attribute home-sale table with planted outliers and missing rows."""
    rng = np.random.default_rng(seed)
    n = rows

    quality_p = [0.03, 0.12, 0.45, 0.30, 0.10]
    cols: dict[str, list[str]] = {}

    cols["Id"] = [str(i + 1) for i in range(n)]
    cols["MSZoning"] = list(_choice(rng, ["RL", "RM", "FV", "RH", "C"], n, [0.78, 0.14, 0.04, 0.02, 0.02]))
    lot_frontage = rng.normal(70, 22, n).clip(21, 200)
    cols["LotFrontage"] = [_fmt(v) for v in lot_frontage]
    lot_area = np.exp(rng.normal(9.1, 0.45, n)).clip(1300, 60000)
    cols["LotArea"] = [_fmt(v) for v in lot_area]
    cols["Street"] = list(_choice(rng, ["Pave", "Grvl"], n, [0.996, 0.004]))
    cols["Alley"] = list(_choice(rng, ["Grvl", "Pave"], n))
    cols["LotShape"] = list(_choice(rng, ["Reg", "IR1", "IR2", "IR3"], n, [0.63, 0.33, 0.03, 0.01]))
    cols["LandContour"] = list(_choice(rng, ["Lvl", "Bnk", "HLS", "Low"], n, [0.9, 0.04, 0.03, 0.03]))
    cols["Utilities"] = list(_choice(rng, ["AllPub", "NoSeWa"], n, [0.999, 0.001]))
    cols["LotConfig"] = list(_choice(rng, ["Inside", "Corner", "CulDSac", "FR2", "FR3"], n, [0.72, 0.18, 0.06, 0.03, 0.01]))
    cols["LandSlope"] = list(_choice(rng, ["Gtl", "Mod", "Sev"], n, [0.95, 0.04, 0.01]))
    cols["Neighborhood"] = list(_choice(rng, _NEIGHBORHOODS, n))
    cols["Condition1"] = list(_choice(rng, _CONDITIONS, n, [0.86, 0.055, 0.033, 0.018, 0.013, 0.008, 0.006, 0.004, 0.003]))
    cols["Condition2"] = list(_choice(rng, _CONDITIONS, n, [0.99, 0.004, 0.002, 0.001, 0.001, 0.001, 0.0005, 0.0003, 0.0002]))
    cols["BldgType"] = list(_choice(rng, ["1Fam", "2fmCon", "Duplex", "TwnhsE", "Twnhs"], n, [0.835, 0.021, 0.036, 0.078, 0.03]))
    cols["HouseStyle"] = list(_choice(rng, ["1Story", "2Story", "1.5Fin", "SLvl", "SFoyer", "1.5Unf", "2.5Unf", "2.5Fin"], n, [0.497, 0.305, 0.105, 0.044, 0.025, 0.01, 0.008, 0.006]))

    overall_qual = rng.integers(1, 11, n)
    overall_cond = rng.integers(1, 10, n)
    cols["OverallQual"] = [str(v) for v in overall_qual]
    cols["OverallCond"] = [str(v) for v in overall_cond]
    year_built = rng.integers(1872, 2011, n)
    cols["YearBuilt"] = [str(v) for v in year_built]
    cols["YearRemodAdd"] = [str(max(1950, y + int(g))) for y, g in zip(year_built, rng.integers(0, 40, n))]
    cols["RoofStyle"] = list(_choice(rng, ["Gable", "Hip", "Flat", "Gambrel", "Mansard", "Shed"], n, [0.78, 0.196, 0.009, 0.008, 0.005, 0.002]))
    cols["RoofMatl"] = list(_choice(rng, ["CompShg", "Tar&Grv", "WdShngl", "WdShake"], n, [0.982, 0.008, 0.005, 0.005]))
    cols["Exterior1st"] = list(_choice(rng, ["VinylSd", "HdBoard", "MetalSd", "Wd Sdng", "Plywood", "CemntBd", "BrkFace", "Stucco"], n, [0.35, 0.15, 0.15, 0.14, 0.07, 0.042, 0.034, 0.024]))
    cols["Exterior2nd"] = list(_choice(rng, ["VinylSd", "HdBoard", "MetalSd", "Wd Sdng", "Plywood", "CmentBd", "BrkFace", "Stucco"], n, [0.345, 0.142, 0.147, 0.135, 0.097, 0.041, 0.017, 0.076]))
    cols["MasVnrType"] = list(_choice(rng, ["None", "BrkFace", "Stone", "BrkCmn"], n, [0.6, 0.3, 0.09, 0.01]))
    mas_area = np.where(rng.random(n) < 0.6, 0.0, np.exp(rng.normal(5.0, 0.6, n)))
    cols["MasVnrArea"] = [_fmt(v) for v in mas_area]
    exter_qual = _choice(rng, _QUALITY, n, quality_p)
    cols["ExterQual"] = list(exter_qual)
    # Finish quality travels together: exterior condition follows quality.
    cols["ExterCond"] = list(
        np.where(rng.random(n) < 0.7, exter_qual, _choice(rng, _QUALITY, n, quality_p))
    )
    cols["Foundation"] = list(_choice(rng, ["PConc", "CBlock", "BrkTil", "Slab", "Stone", "Wood"], n, [0.443, 0.434, 0.1, 0.016, 0.004, 0.003]))
    cols["BsmtQual"] = list(_choice(rng, _QUALITY, n, quality_p))
    cols["BsmtCond"] = list(_choice(rng, _QUALITY, n, quality_p))
    cols["BsmtExposure"] = list(_choice(rng, ["No", "Av", "Gd", "Mn"], n, [0.65, 0.155, 0.092, 0.078]))
    cols["BsmtFinType1"] = list(_choice(rng, ["Unf", "GLQ", "ALQ", "BLQ", "Rec", "LwQ"], n, [0.295, 0.286, 0.15, 0.101, 0.091, 0.05]))
    cols["BsmtFinType2"] = list(_choice(rng, ["Unf", "GLQ", "ALQ", "BLQ", "Rec", "LwQ"], n, [0.861, 0.01, 0.013, 0.023, 0.037, 0.031]))
    bsmt_fin1 = np.where(rng.random(n) < 0.32, 0.0, np.exp(rng.normal(6.3, 0.7, n))).clip(0, 5000)
    cols["BsmtFinSF1"] = [_fmt(v) for v in bsmt_fin1]
    cols["BsmtFinSF2"] = [_fmt(v) for v in np.where(rng.random(n) < 0.88, 0.0, np.exp(rng.normal(5.6, 0.6, n)))]
    bsmt_unf = np.exp(rng.normal(6.0, 0.9, n)).clip(0, 2500)
    cols["BsmtUnfSF"] = [_fmt(v) for v in bsmt_unf]
    total_bsmt = bsmt_fin1 + bsmt_unf
    cols["TotalBsmtSF"] = [_fmt(v) for v in total_bsmt]
    cols["Heating"] = list(_choice(rng, ["GasA", "GasW", "Grav", "Wall", "OthW", "Floor"], n, [0.978, 0.012, 0.005, 0.003, 0.001, 0.001]))
    cols["HeatingQC"] = list(_choice(rng, _QUALITY, n, [0.01, 0.034, 0.29, 0.166, 0.5]))
    cols["CentralAir"] = list(_choice(rng, ["Y", "N"], n, [0.935, 0.065]))
    cols["Electrical"] = list(_choice(rng, ["SBrkr", "FuseA", "FuseF", "FuseP", "Mix"], n, [0.915, 0.064, 0.018, 0.002, 0.001]))

    first_flr = (total_bsmt * 0.85 + rng.normal(250, 120, n)).clip(300, 4000)
    cols["1stFlrSF"] = [_fmt(v) for v in first_flr]
    second_flr = np.where(rng.random(n) < 0.43, np.exp(rng.normal(6.5, 0.35, n)), 0.0)
    cols["2ndFlrSF"] = [_fmt(v) for v in second_flr]
    cols["LowQualFinSF"] = [_fmt(v) for v in np.where(rng.random(n) < 0.98, 0.0, rng.uniform(100, 500, n))]
    grliv = (first_flr + second_flr + rng.normal(40, 30, n)).clip(334, 5000)
    cols["GrLivArea"] = [_fmt(v) for v in grliv]
    cols["BsmtFullBath"] = [str(v) for v in rng.integers(0, 3, n)]
    cols["BsmtHalfBath"] = [str(v) for v in _choice(rng, [0, 1], n, [0.94, 0.06])]
    cols["FullBath"] = [str(v) for v in rng.integers(1, 4, n)]
    cols["HalfBath"] = [str(v) for v in _choice(rng, [0, 1, 2], n, [0.62, 0.36, 0.02])]
    cols["BedroomAbvGr"] = [str(v) for v in rng.integers(1, 6, n)]
    cols["KitchenAbvGr"] = [str(v) for v in _choice(rng, [1, 2], n, [0.95, 0.05])]
    cols["KitchenQual"] = list(
        np.where(rng.random(n) < 0.7, exter_qual, _choice(rng, _QUALITY, n, quality_p))
    )
    cols["TotRmsAbvGrd"] = [str(v) for v in rng.integers(3, 13, n)]
    cols["Functional"] = list(_choice(rng, ["Typ", "Min2", "Min1", "Mod", "Maj1", "Maj2", "Sev"], n, [0.93, 0.023, 0.021, 0.01, 0.009, 0.004, 0.003]))
    fireplaces = _choice(rng, [0, 1, 2, 3], n, [0.47, 0.44, 0.08, 0.01])
    cols["Fireplaces"] = [str(v) for v in fireplaces]
    cols["FireplaceQu"] = list(_choice(rng, _QUALITY, n, quality_p))
    cols["GarageType"] = list(_choice(rng, ["Attchd", "Detchd", "BuiltIn", "Basment", "CarPort", "2Types"], n, [0.63, 0.28, 0.06, 0.014, 0.01, 0.006]))
    cols["GarageYrBlt"] = [str(max(1895, y + int(g))) for y, g in zip(year_built, rng.integers(0, 10, n))]
    cols["GarageFinish"] = list(_choice(rng, ["Unf", "RFn", "Fin"], n, [0.44, 0.306, 0.254]))
    garage_cars = _choice(rng, [0, 1, 2, 3, 4], n, [0.055, 0.25, 0.56, 0.123, 0.012])
    cols["GarageCars"] = [str(v) for v in garage_cars]
    cols["GarageArea"] = [_fmt(v) for v in (garage_cars * 260 + rng.normal(30, 60, n)).clip(0, 1500)]
    cols["GarageQual"] = list(_choice(rng, _QUALITY, n, quality_p))
    cols["GarageCond"] = list(_choice(rng, _QUALITY, n, quality_p))
    cols["PavedDrive"] = list(_choice(rng, ["Y", "N", "P"], n, [0.917, 0.061, 0.022]))
    cols["WoodDeckSF"] = [_fmt(v) for v in np.where(rng.random(n) < 0.52, 0.0, np.exp(rng.normal(5.0, 0.6, n)))]
    cols["OpenPorchSF"] = [_fmt(v) for v in np.where(rng.random(n) < 0.45, 0.0, np.exp(rng.normal(4.0, 0.7, n)))]
    cols["EnclosedPorch"] = [_fmt(v) for v in np.where(rng.random(n) < 0.86, 0.0, rng.uniform(20, 400, n))]
    cols["3SsnPorch"] = [_fmt(v) for v in np.where(rng.random(n) < 0.98, 0.0, rng.uniform(100, 400, n))]
    cols["ScreenPorch"] = [_fmt(v) for v in np.where(rng.random(n) < 0.92, 0.0, rng.uniform(80, 400, n))]
    pool_area = np.where(rng.random(n) < 0.995, 0.0, rng.uniform(400, 800, n))
    cols["PoolArea"] = [_fmt(v) for v in pool_area]
    cols["PoolQC"] = list(_choice(rng, ["Gd", "Fa", "Ex"], n))
    cols["Fence"] = list(_choice(rng, ["MnPrv", "GdPrv", "GdWo", "MnWw"], n, [0.56, 0.21, 0.19, 0.04]))
    cols["MiscFeature"] = list(_choice(rng, ["Shed", "Gar2", "Othr", "TenC"], n, [0.9, 0.05, 0.04, 0.01]))
    cols["MiscVal"] = [_fmt(v) for v in np.where(rng.random(n) < 0.96, 0.0, rng.uniform(400, 15500, n))]
    cols["MoSold"] = [str(v) for v in rng.integers(1, 13, n)]
    cols["YrSold"] = [str(v) for v in rng.integers(2006, 2011, n)]
    sale_type = _choice(rng, ["WD", "New", "COD", "ConLD", "ConLI", "ConLw", "CWD", "Oth", "Con"], n, [0.867, 0.083, 0.029, 0.006, 0.003, 0.003, 0.003, 0.003, 0.003])
    cols["SaleType"] = list(sale_type)
    # New builds close as partial sales almost always.
    base_cond = _choice(rng, ["Normal", "Abnorml", "Family", "Alloca", "AdjLand"], n, [0.89, 0.075, 0.022, 0.01, 0.003])
    cols["SaleCondition"] = list(
        np.where((sale_type == "New") & (rng.random(n) < 0.92), "Partial", base_cond)
    )

    price = (
        45.0 * grliv
        + 28.0 * first_flr
        + 22.0 * bsmt_unf
        + 9000.0 * overall_qual
        + 0.6 * lot_area
        + rng.normal(0, 9000, n)
    ).clip(34900, 900000)
    cols["SalePrice"] = [_fmt(v) for v in price]

    header = list(cols.keys())
    assert len(header) == 80, f"expected 80 columns, built {len(header)}"

    # Sparse columns: high missing rates like the real-world shapes.
    sparse = {
        "LotFrontage": 0.17,
        "Alley": 0.94,
        "MasVnrType": 0.006,
        "MasVnrArea": 0.006,
        "BsmtQual": 0.025,
        "BsmtCond": 0.025,
        "BsmtExposure": 0.026,
        "BsmtFinType1": 0.025,
        "BsmtFinType2": 0.026,
        "Electrical": 0.0007,
        "FireplaceQu": 0.47,
        "GarageType": 0.055,
        "GarageYrBlt": 0.055,
        "GarageFinish": 0.055,
        "GarageQual": 0.055,
        "GarageCond": 0.055,
        "PoolQC": 0.995,
        "Fence": 0.8,
        "MiscFeature": 0.96,
    }
    for name, rate in sparse.items():
        mask = rng.random(n) < rate
        column = cols[name]
        cols[name] = ["" if m else v for v, m in zip(column, mask)]

    # A block of badly-collected rows whose missing fraction exceeds 1/2.
    bad_rows = rng.choice(n, size=40, replace=False)
    protected = {"Id", "SalePrice"}
    for i in bad_rows:
        doomed = rng.choice(
            [h for h in header if h not in protected], size=48, replace=False
        )
        for name in doomed:
            cols[name][i] = ""

    # Fig-1-style planted outliers: huge lots sold cheap.
    planted = rng.choice(n, size=8, replace=False)
    for i in planted:
        if i in set(bad_rows):
            continue
        cols["LotArea"][i] = _fmt(rng.uniform(150000, 215000))
        cols["SalePrice"][i] = _fmt(rng.uniform(52000, 95000))

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for i in range(n):
        writer.writerow([cols[name][i] for name in header])
    return buf.getvalue().encode("utf-8")


def air_quality_like_csv(seed: int = 0, rows: int = AIR_ROWS) -> bytes:
    """15-attribute daily air-quality table across 26 cities."""
    rng = np.random.default_rng(seed)
    n = rows
    n_cities = len(_CITIES)
    start = date(2015, 1, 1)

    city_idx = np.arange(n) % n_cities
    day = np.arange(n) // n_cities
    city_bias = rng.uniform(0.4, 2.2, n_cities)
    season = 1.0 + 0.45 * np.sin(2 * np.pi * (day % 365) / 365.0)

    def pollutant(scale, sigma):
        base = np.exp(rng.normal(np.log(scale), sigma, n))
        return base * city_bias[city_idx] * season

    pm25 = pollutant(55.0, 0.55)
    pm10 = pm25 * rng.uniform(1.6, 2.2, n)
    no = pollutant(9.0, 0.6)
    no2 = pollutant(26.0, 0.5)
    nox = no + no2 * rng.uniform(0.4, 0.7, n)
    nh3 = pollutant(22.0, 0.5)
    co = pollutant(1.1, 0.45)
    so2 = pollutant(12.0, 0.55)
    o3 = pollutant(33.0, 0.45)
    benzene = pollutant(2.8, 0.6)
    toluene = pollutant(7.5, 0.65)
    aqi = (1.9 * pm25 + 0.32 * pm10 + 0.9 * no2 + 14.0 * co + rng.normal(0, 9, n)).clip(8, 980)

    def bucket(v):
        if v <= 50:
            return "Good"
        if v <= 100:
            return "Satisfactory"
        if v <= 200:
            return "Moderate"
        if v <= 300:
            return "Poor"
        if v <= 400:
            return "Very Poor"
        return "Severe"

    numeric = {
        "PM2.5": pm25,
        "PM10": pm10,
        "NO": no,
        "NO2": no2,
        "NOx": nox,
        "NH3": nh3,
        "CO": co,
        "SO2": so2,
        "O3": o3,
        "Benzene": benzene,
        "Toluene": toluene,
    }
    text_cols: dict[str, list[str]] = {}
    text_cols["Date"] = [(start + timedelta(days=int(v))).isoformat() for v in day]
    text_cols["City"] = [_CITIES[i] for i in city_idx]
    for name, values in numeric.items():
        # Low-magnitude gases need the third decimal to keep measurement-level
        # cardinality at this row count.
        decimals = 3 if name in ("CO", "Benzene", "Toluene") else 2
        cells = [f"{v:.{decimals}f}" for v in values]
        mask = rng.random(n) < 0.08
        text_cols[name] = ["" if m else c for c, m in zip(cells, mask)]
    aqi_cells = [f"{v:.1f}" for v in aqi]
    aqi_missing = rng.random(n) < 0.11
    text_cols["AQI"] = ["" if m else c for c, m in zip(aqi_cells, aqi_missing)]
    text_cols["AQI_Bucket"] = [
        "" if m else bucket(v) for v, m in zip(aqi, aqi_missing)
    ]

    header = list(text_cols.keys())
    assert len(header) == 15, f"expected 15 columns, built {len(header)}"

    # Early-deployment rows: most sensors dark, so missing fraction > 1/2.
    bad_rows = rng.choice(n, size=3600, replace=False)
    sensor_cols = [h for h in header if h not in ("Date", "City")]
    for i in bad_rows:
        doomed = rng.choice(sensor_cols, size=9, replace=False)
        for name in doomed:
            text_cols[name][i] = ""

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for i in range(n):
        writer.writerow([text_cols[name][i] for name in header])
    return buf.getvalue().encode("utf-8")
