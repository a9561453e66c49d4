"""Readers and writers for datasets, results tables and charts."""

from .datasets import load_baseball, read_baseball_csv
from .results import read_results, write_records, write_summaries
from .svg import ChartSpec, emit_svg

__all__ = [
    "ChartSpec",
    "emit_svg",
    "load_baseball",
    "read_baseball_csv",
    "read_results",
    "write_records",
    "write_summaries",
]
