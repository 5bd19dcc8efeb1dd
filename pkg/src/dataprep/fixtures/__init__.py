"""Bundled synthetic fixture generators."""

from .generators import AIR_ROWS, HOUSE_ROWS, air_quality_like_csv, house_prices_like_csv

__all__ = ["AIR_ROWS", "HOUSE_ROWS", "air_quality_like_csv", "house_prices_like_csv"]
