"""dataprep: data-preparation engine and interactive cleaning studio."""

__version__ = "0.1.0"
