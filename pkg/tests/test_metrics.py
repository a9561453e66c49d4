"""Tests for width curves and coverage summaries."""

import math

import pandas as pd
import pytest

from anytime_cs.analytics.metrics import (
    RECORD_COLUMNS,
    checkpoint_widths,
    mean_band,
    ordering_report,
    records_to_frame,
    summarize_coverage,
    width_curve,
)
from anytime_cs.models import ExperimentRecord, Interval, Method


def _record(method, t, lo, hi, replication=0):
    return ExperimentRecord.from_interval(method, t, Interval(lo, hi), replication, seed=0)


@pytest.fixture
def records():
    """Create two replications of two methods over three steps."""
    return [
        _record(Method.BETTING, 1, 0.0, 1.0, 0),
        _record(Method.BETTING, 2, 0.1, 0.5, 0),
        _record(Method.BETTING, 3, 0.2, 0.4, 0),
        _record(Method.BETTING, 1, 0.0, 1.0, 1),
        _record(Method.BETTING, 2, 0.2, 0.4, 1),
        _record(Method.BETTING, 3, 0.2, 0.3, 1),
        _record(Method.PREB, 1, 0.0, 1.0, 0),
        _record(Method.PREB, 2, 0.0, 0.8, 0),
        _record(Method.PREB, 3, 0.1, 0.5, 0),
        _record(Method.PREB, 1, 0.0, 1.0, 1),
        _record(Method.PREB, 2, 0.0, 0.6, 1),
        _record(Method.PREB, 3, 0.1, 0.3, 1),
    ]


def test_records_to_frame(records):
    """Test the results column layout."""
    frame = records_to_frame(records)

    assert list(frame.columns) == RECORD_COLUMNS
    assert len(frame) == 12
    assert records_to_frame(frame) is frame


def test_width_curve_single_replication(records):
    """Test that one replication reproduces the raw widths."""
    curve = width_curve([r for r in records if r.replication == 0])

    assert curve.loc[2, "betting"] == pytest.approx(0.4)
    assert curve.loc[3, "preb"] == pytest.approx(0.4)


def test_width_curve_averages_replications(records):
    """Test the mean width across replications."""
    curve = width_curve(records)

    assert list(curve.index) == [1, 2, 3]
    assert curve.loc[2, "betting"] == pytest.approx(0.3)
    assert curve.loc[2, "preb"] == pytest.approx(0.7)
    assert curve.loc[3, "betting"] == pytest.approx(0.15)


def test_width_curve_empty():
    """Test that no records give an empty table."""
    assert width_curve([]).empty


def test_mean_band(records):
    """Test mean endpoints per (t, method)."""
    band = mean_band(records)

    assert band.loc[(3, "betting"), "lo"] == pytest.approx(0.2)
    assert band.loc[(3, "betting"), "hi"] == pytest.approx(0.35)


def test_checkpoint_widths_skips_missing(records):
    """Test that absent checkpoints are dropped."""
    table = checkpoint_widths(width_curve(records), [2, 3, 1000])

    assert list(table.index) == [2, 3]


def test_ordering_report(records):
    """Test the side-by-side width comparison."""
    report = ordering_report(width_curve(records), Method.BETTING, Method.PREB, [2, 3])

    assert report["first_tighter"].all()
    assert report.loc[2, "ratio"] == pytest.approx(0.3 / 0.7)


def test_summarize_coverage():
    """Test coverage with an empty interval counted as a miss."""
    intervals = [Interval(0.2, 0.4), Interval(0.3, 0.5), Interval.EMPTY]

    summary = summarize_coverage(4, Method.BETTING, intervals, truth=0.35)

    assert summary.unit_id == 4
    assert summary.coverage_prob == pytest.approx(2 / 3)
    assert summary.mean_lo == pytest.approx(0.25)
    assert summary.mean_hi == pytest.approx(0.45)
    assert summary.replications == 3


def test_summarize_coverage_all_empty():
    """Test that all-empty replications give zero coverage and NaN endpoints."""
    summary = summarize_coverage(1, Method.BOOTSTRAP, [Interval.EMPTY], truth=0.3)

    assert summary.coverage_prob == 0.0
    assert math.isnan(summary.mean_lo)


def test_summarize_coverage_requires_intervals():
    """Test the non-empty precondition."""
    with pytest.raises(ValueError):
        summarize_coverage(1, Method.BETTING, [], truth=0.3)


def test_frame_passthrough_keeps_dtypes(records):
    """Test that a frame read back from disk feeds the same curve."""
    frame = pd.DataFrame(records_to_frame(records).to_dict("list"))

    assert width_curve(frame).equals(width_curve(records))
