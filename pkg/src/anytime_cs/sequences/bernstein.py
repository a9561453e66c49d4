"""Predictable plug-in empirical Bernstein confidence sequence.

Closed form at time t:

    center = sum lambda_i X_i / sum lambda_i
    radius = (log(2/alpha) + sum v_i psi_E(lambda_i)) / sum lambda_i

with lambda_i = min(lambda_i~, 1/2), v_i = 4 (X_i - mu_hat_{i-1})^2 and
psi_E(l) = (-log(1 - l) - l) / 4.
"""

import math
from dataclasses import dataclass, field

from anytime_cs.models import Interval, Method
from anytime_cs.sequences.base import ConfidenceSequence, check_observation
from anytime_cs.sequences.intervals import UNIT, RunningIntersection, clip_unit
from anytime_cs.sequences.plugin import PredictableStats, predictable_fraction

EB_TRUNCATION = 0.5


def psi_e(lam: float) -> float:
    """Exponential-Bernstein rate function on [0, 1)."""
    if not 0.0 <= lam < 1.0:
        raise ValueError(f"psi_E is defined on [0, 1), got {lam}")
    return (-math.log1p(-lam) - lam) / 4.0


@dataclass
class PrEbState:
    """Running accumulators of the closed-form interval."""

    stats: PredictableStats = field(default_factory=PredictableStats)
    sum_lambda: float = 0.0
    sum_lambda_x: float = 0.0
    sum_v_psi: float = 0.0
    ri: RunningIntersection = field(default_factory=RunningIntersection)


def preb_fraction(stats: PredictableStats, alpha: float) -> float:
    return min(predictable_fraction(stats, alpha), EB_TRUNCATION)


def preb_update(state: PrEbState, x: float, alpha: float) -> PrEbState:
    """Fold X_t into the accumulators; lambda_t and mu_hat_{t-1} come from X_1..X_{t-1}."""
    x = check_observation(x, state.stats.t + 1)
    lam = preb_fraction(state.stats, alpha)
    v = 4.0 * (x - state.stats.mu_hat) ** 2

    state.sum_lambda += lam
    state.sum_lambda_x += lam * x
    state.sum_v_psi += v * psi_e(lam)
    state.stats.update(x)
    return state


def preb_step_set(state: PrEbState, alpha: float) -> Interval:
    """Symmetric per-step interval center +/- radius, before clipping."""
    if state.stats.t == 0:
        return UNIT
    center = state.sum_lambda_x / state.sum_lambda
    radius = (math.log(2.0 / alpha) + state.sum_v_psi) / state.sum_lambda
    return Interval(center - radius, center + radius)


def preb_interval(state: PrEbState, alpha: float) -> Interval:
    """Push the clipped per-step set into the running intersection and return C_t."""
    if state.stats.t == 0:
        return state.ri.current
    state.ri = state.ri.push(clip_unit(preb_step_set(state, alpha)))
    return state.ri.current


class PrEbCS(ConfidenceSequence):
    """Streaming predictable plug-in empirical Bernstein confidence sequence."""

    method = Method.PREB

    def __init__(self, alpha: float):
        super().__init__(alpha)
        self.state = PrEbState()

    @property
    def t(self) -> int:
        return self.state.stats.t

    @property
    def interval(self) -> Interval:
        return self.state.ri.current

    def update(self, x: float) -> Interval:
        preb_update(self.state, x, self.alpha)
        interval = preb_interval(self.state, self.alpha)
        if self.state.ri.became_empty:
            self._log_emptied()
        return interval
