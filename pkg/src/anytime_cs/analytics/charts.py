"""Figure analogues of the two studies, rendered as SVG files."""

import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
import structlog

from anytime_cs.analytics.metrics import mean_band, width_curve
from anytime_cs.loaders.svg import ChartSpec, Point, emit_svg
from anytime_cs.models import Method, PlayerRecord

logger = structlog.get_logger()

MAX_POINTS = 600

SYNTHETIC_BAND_FILE = "synthetic_cs.svg"
SYNTHETIC_WIDTH_FILE = "synthetic_width.svg"
BASEBALL_INTERVAL_FILE = "baseball_intervals.svg"
BASEBALL_COVERAGE_FILE = "baseball_coverage.svg"


def _methods_in(values: pd.Index) -> List[str]:
    present = set(values)
    return [m.value for m in Method if m.value in present]


def _thin(ts: np.ndarray) -> np.ndarray:
    """At most MAX_POINTS evenly spaced positions, always keeping both ends."""
    if len(ts) <= MAX_POINTS:
        return np.arange(len(ts))
    return np.unique(np.linspace(0, len(ts) - 1, MAX_POINTS).round().astype(int))


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


def band_table(records: pd.DataFrame) -> Dict[str, List[Point]]:
    """Mean (t, lo, hi) per method across replications."""
    band = mean_band(records)
    table: Dict[str, List[Point]] = {}
    for method in _methods_in(band.index.get_level_values("method")):
        rows = band.xs(method, level="method")
        keep = _thin(rows.index.to_numpy())
        table[method] = [
            (float(t), float(lo), float(hi))
            for t, lo, hi in zip(rows.index[keep], rows["lo"].iloc[keep], rows["hi"].iloc[keep])
            if _finite(lo, hi)
        ]
    return table


def width_table(records: pd.DataFrame) -> Dict[str, List[Point]]:
    """Mean (t, width) per method across replications."""
    curve = width_curve(records)
    keep = _thin(curve.index.to_numpy())
    return {
        method: [(float(t), float(w)) for t, w in curve[method].iloc[keep].items() if _finite(w)]
        for method in _methods_in(curve.columns)
    }


def interval_table(summaries: pd.DataFrame) -> Dict[str, List[Point]]:
    """(player_id, mean_lo, mean_hi) per method."""
    return {
        method: [
            (float(row.player_id), float(row.mean_lo), float(row.mean_hi))
            for row in group.sort_values("player_id").itertuples()
            if _finite(row.mean_lo, row.mean_hi)
        ]
        for method, group in _grouped(summaries)
    }


def coverage_table(summaries: pd.DataFrame) -> Dict[str, List[Point]]:
    """(player_id, coverage_prob) per method."""
    return {
        method: [
            (float(row.player_id), float(row.coverage_prob))
            for row in group.sort_values("player_id").itertuples()
        ]
        for method, group in _grouped(summaries)
    }


def _grouped(summaries: pd.DataFrame) -> List[tuple]:
    return [
        (method, summaries[summaries["method"] == method])
        for method in _methods_in(pd.Index(summaries["method"].unique()))
    ]


def _write_svg(svg: str, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(svg)
    logger.info("chart_written", path=str(path), bytes=len(svg))
    return path


def render_synthetic_figures(records: pd.DataFrame, out_dir: Union[str, Path]) -> List[Path]:
    """Confidence-sequence bands and width curves of a synthetic results table."""
    out_dir = Path(out_dir)
    band = emit_svg(
        band_table(records),
        ChartSpec(
            title="Confidence sequences (mean over replications)",
            x_label="t",
            y_label="mean",
            kind="band",
            y_range=(0.0, 1.0),
        ),
    )
    widths = emit_svg(
        width_table(records),
        ChartSpec(title="Coverage length", x_label="t", y_label="width", kind="line"),
    )
    return [
        _write_svg(band, out_dir / SYNTHETIC_BAND_FILE),
        _write_svg(widths, out_dir / SYNTHETIC_WIDTH_FILE),
    ]


def render_baseball_figures(
    summaries: pd.DataFrame,
    out_dir: Union[str, Path],
    players: Optional[Sequence[PlayerRecord]] = None,
) -> List[Path]:
    """Average intervals per player, with true season averages as markers, and coverage bars."""
    out_dir = Path(out_dir)
    markers = {float(p.player_id): p.p_true for p in players} if players else {}
    intervals = emit_svg(
        interval_table(summaries),
        ChartSpec(
            title="Average intervals after 45 at-bats",
            x_label="player",
            y_label="batting average",
            kind="interval",
            markers=markers,
            marker_label="season average",
        ),
    )
    coverage = emit_svg(
        coverage_table(summaries),
        ChartSpec(
            title="Coverage probability",
            x_label="player",
            y_label="coverage",
            kind="bar",
            y_range=(0.0, 1.0),
        ),
    )
    return [
        _write_svg(intervals, out_dir / BASEBALL_INTERVAL_FILE),
        _write_svg(coverage, out_dir / BASEBALL_COVERAGE_FILE),
    ]
