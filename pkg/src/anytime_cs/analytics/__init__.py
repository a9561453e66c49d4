"""Width curves, coverage summaries and figure rendering."""

from .metrics import (
    checkpoint_widths,
    mean_band,
    ordering_report,
    summarize_coverage,
    width_curve,
)
from .charts import render_baseball_figures, render_synthetic_figures

__all__ = [
    "checkpoint_widths",
    "mean_band",
    "ordering_report",
    "render_baseball_figures",
    "render_synthetic_figures",
    "summarize_coverage",
    "width_curve",
]
