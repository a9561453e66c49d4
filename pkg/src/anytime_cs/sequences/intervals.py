"""Interval arithmetic and the running intersection shared by all engines."""

from dataclasses import dataclass, field

from anytime_cs.models import Interval

UNIT = Interval.unit()


def intersect(a: Interval, b: Interval) -> Interval:
    """Set intersection of two closed intervals; EMPTY when they are disjoint."""
    if a.empty or b.empty:
        return Interval.EMPTY
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return Interval.EMPTY
    return Interval(lo, hi)


def clip_unit(a: Interval) -> Interval:
    """Intersect with [0, 1]."""
    return intersect(a, UNIT)


@dataclass(frozen=True)
class RunningIntersection:
    """Intersection of every per-step set pushed so far.

    ``became_empty`` is True only on the value returned by the push that
    emptied the intersection, so callers can log the event exactly once.
    """

    current: Interval = field(default=UNIT)
    became_empty: bool = False

    def push(self, step_set: Interval) -> "RunningIntersection":
        return push_step(self, step_set)


def push_step(ri: RunningIntersection, step_set: Interval) -> RunningIntersection:
    """Fold a per-step set into the running intersection; never widens."""
    new = intersect(ri.current, step_set)
    return RunningIntersection(current=new, became_empty=new.empty and not ri.current.empty)
