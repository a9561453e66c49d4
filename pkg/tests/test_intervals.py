"""Tests for interval arithmetic and the running intersection."""

import math

import pytest

from anytime_cs.exceptions import DataContractError
from anytime_cs.models import Interval, StreamRecord
from anytime_cs.sequences.intervals import (
    UNIT,
    RunningIntersection,
    clip_unit,
    intersect,
    push_step,
)


def test_intersect_overlapping():
    """Test intersection of overlapping intervals."""
    assert intersect(Interval(0.2, 0.8), Interval(0.5, 0.9)) == Interval(0.5, 0.8)
    assert intersect(UNIT, Interval(0.3, 0.4)) == Interval(0.3, 0.4)


def test_intersect_disjoint_is_empty():
    """Test that disjoint intervals intersect to the explicit empty set."""
    result = intersect(Interval(0.0, 0.2), Interval(0.5, 1.0))

    assert result.empty
    assert result == Interval.EMPTY
    assert result.width == 0.0
    assert math.isnan(result.lo) and math.isnan(result.hi)


def test_intersect_touching_endpoints():
    """Test that closed intervals sharing an endpoint meet in a point."""
    assert intersect(Interval(0.0, 0.5), Interval(0.5, 1.0)) == Interval(0.5, 0.5)


def test_intersect_commutative_and_associative():
    """Test intersect laws over a grid of rational endpoints."""
    ends = [i / 4 for i in range(5)]
    intervals = [Interval(a, b) for a in ends for b in ends if a <= b] + [Interval.EMPTY]

    for a in intervals:
        for b in intervals:
            assert intersect(a, b) == intersect(b, a)
            for c in intervals[::3]:
                assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


def test_clip_unit():
    """Test clipping to [0, 1]."""
    assert clip_unit(Interval(-3.8, 8.5)) == UNIT
    assert clip_unit(Interval(0.1, 1.4)) == Interval(0.1, 1.0)
    assert clip_unit(Interval(0.2, 0.3)) == Interval(0.2, 0.3)
    assert clip_unit(Interval(1.5, 2.0)).empty


def test_clip_unit_idempotent():
    """Test that clipping twice equals clipping once."""
    for interval in [Interval(-3.8, 8.5), Interval(0.1, 1.4), Interval(-1.0, -0.5)]:
        assert clip_unit(clip_unit(interval)) == clip_unit(interval)


def test_push_step_never_widens():
    """Test the running intersection examples."""
    ri = push_step(RunningIntersection(), Interval(0.2, 0.6))
    assert ri.current == Interval(0.2, 0.6)

    ri = push_step(ri, UNIT)
    assert ri.current == Interval(0.2, 0.6)
    assert not ri.became_empty


def test_push_step_signals_empty_once():
    """Test that emptying is flagged on the emptying push only."""
    ri = RunningIntersection(current=Interval(0.2, 0.3))

    ri = ri.push(Interval(0.4, 0.5))
    assert ri.current.empty
    assert ri.became_empty

    ri = ri.push(Interval(0.0, 1.0))
    assert ri.current.empty
    assert not ri.became_empty


def test_interval_validation():
    """Test rejection of malformed intervals."""
    with pytest.raises(ValueError):
        Interval(0.6, 0.4)
    with pytest.raises(ValueError):
        Interval(math.nan, 1.0)
    with pytest.raises(ValueError):
        Interval(0.0, 1.0, empty=True)


def test_interval_contains_is_closed():
    """Test that membership includes the endpoints and the empty set holds nothing."""
    interval = Interval(0.25, 0.5)

    assert interval.contains(0.25)
    assert interval.contains(0.5)
    assert not interval.contains(0.51)
    assert not Interval.EMPTY.contains(0.5)


def test_stream_record_contract():
    """Test that stream records reject bad time indices and observations."""
    assert StreamRecord(1, 0.0).x == 0.0

    with pytest.raises(DataContractError):
        StreamRecord(0, 0.5)
    with pytest.raises(DataContractError):
        StreamRecord(1, 1.5)
