"""Width curves and coverage summaries over experiment records."""

from typing import Iterable, List, Sequence, Union

import pandas as pd

from anytime_cs.models import CoverageSummary, ExperimentRecord, Interval, Method

RECORD_COLUMNS = ["method", "replication", "t", "lo", "hi", "width"]
SUMMARY_COLUMNS = ["method", "player_id", "coverage_prob", "mean_lo", "mean_hi"]

Records = Union[Iterable[ExperimentRecord], pd.DataFrame]


def records_to_frame(records: Records) -> pd.DataFrame:
    """ExperimentRecords as a frame with RECORD_COLUMNS (frames pass through)."""
    if isinstance(records, pd.DataFrame):
        return records
    rows = [(r.method.value, r.replication, r.t, r.lo, r.hi, r.width) for r in records]
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def width_curve(records: Records) -> pd.DataFrame:
    """Mean width per method (columns) and t (index) across replications."""
    frame = records_to_frame(records)
    if frame.empty:
        return pd.DataFrame()
    return frame.groupby(["t", "method"])["width"].mean().unstack("method").sort_index()


def mean_band(records: Records) -> pd.DataFrame:
    """Mean lower and upper endpoints per (t, method) across replications."""
    frame = records_to_frame(records)
    return frame.groupby(["t", "method"])[["lo", "hi"]].mean().sort_index()


def checkpoint_widths(curve: pd.DataFrame, checkpoints: Sequence[int]) -> pd.DataFrame:
    """Rows of a width curve at the checkpoints that exist in it."""
    present = [t for t in checkpoints if t in curve.index]
    return curve.loc[present]


def summarize_coverage(
    unit_id: int, method: Method, intervals: Sequence[Interval], truth: float
) -> CoverageSummary:
    """Fraction of intervals containing the truth and their average endpoints.

    Empty intervals count as misses and are left out of the endpoint averages.
    """
    if not intervals:
        raise ValueError("coverage needs at least one replication")
    covered = sum(interval.contains(truth) for interval in intervals)
    filled = [interval for interval in intervals if not interval.empty]
    mean_lo = sum(i.lo for i in filled) / len(filled) if filled else float("nan")
    mean_hi = sum(i.hi for i in filled) / len(filled) if filled else float("nan")
    return CoverageSummary(
        unit_id=unit_id,
        method=method,
        coverage_prob=covered / len(intervals),
        mean_lo=mean_lo,
        mean_hi=mean_hi,
        replications=len(intervals),
    )


def summaries_to_frame(summaries: Iterable[CoverageSummary]) -> pd.DataFrame:
    rows: List[tuple] = [
        (s.method.value, s.unit_id, s.coverage_prob, s.mean_lo, s.mean_hi) for s in summaries
    ]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def ordering_report(
    curve: pd.DataFrame, first: Method, second: Method, checkpoints: Sequence[int]
) -> pd.DataFrame:
    """Mean widths of two methods side by side at the checkpoints, with the ratio first/second."""
    table = checkpoint_widths(curve, checkpoints)[[first.value, second.value]].copy()
    table["ratio"] = table[first.value] / table[second.value]
    table["first_tighter"] = table[first.value] < table[second.value]
    return table
