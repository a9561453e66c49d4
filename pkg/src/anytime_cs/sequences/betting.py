"""Hedged capital process confidence sequence.

For every candidate mean m on the grid {0, 1/G, ..., 1} two gamblers bet on
the sign of X_t - m with predictable fractions:

    K_t^+(m) = prod_{i<=t} (1 + lambda_i^+(m) (X_i - m)),   lambda^+ = min(lambda_i, c/m)
    K_t^-(m) = prod_{i<=t} (1 - lambda_i^-(m) (X_i - m)),   lambda^- = min(lambda_i, c/(1-m))

The hedged wealth max(theta K^+, (1-theta) K^-) is a nonnegative
supermartingale under m = mu, so by Ville's inequality the candidates whose
wealth stays below 1/alpha form a time-uniform confidence sequence. Capitals
are held in log space; truncation keeps every multiplier >= 1 - c > 0.
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from anytime_cs.models import BettingConfig, Interval, Method
from anytime_cs.sequences.base import ConfidenceSequence, check_observation
from anytime_cs.sequences.intervals import RunningIntersection, clip_unit
from anytime_cs.sequences.plugin import PredictableStats, predictable_fraction


@dataclass
class BettingState:
    """Per-grid log-capitals, plug-in statistics and the running intersection."""

    grid: np.ndarray
    cap_plus: np.ndarray
    cap_minus: np.ndarray
    log_cap_plus: np.ndarray
    log_cap_minus: np.ndarray
    max_log_wealth: np.ndarray
    stats: PredictableStats = field(default_factory=PredictableStats)
    ri: RunningIntersection = field(default_factory=RunningIntersection)

    @classmethod
    def initial(cls, cfg: BettingConfig) -> "BettingState":
        grid = np.arange(cfg.grid_size + 1, dtype=np.float64) / cfg.grid_size
        with np.errstate(divide="ignore"):
            cap_plus = cfg.trunc / grid
            cap_minus = cfg.trunc / (1.0 - grid)
        zeros = np.zeros_like(grid)
        state = cls(
            grid=grid,
            cap_plus=cap_plus,
            cap_minus=cap_minus,
            log_cap_plus=zeros.copy(),
            log_cap_minus=zeros.copy(),
            max_log_wealth=np.empty_like(grid),
        )
        state.max_log_wealth[:] = hedged_log_wealth_grid(state, cfg)
        return state


def _log_weights(theta: float) -> Tuple[float, float]:
    log_up = math.log(theta) if theta > 0.0 else -math.inf
    log_down = math.log1p(-theta) if theta < 1.0 else -math.inf
    return log_up, log_down


def truncated_fractions(
    state: BettingState, lam: float
) -> Tuple[np.ndarray, np.ndarray]:
    """lambda^+ = min(lam, c/m) and lambda^- = min(lam, c/(1-m)) over the grid."""
    return np.minimum(lam, state.cap_plus), np.minimum(lam, state.cap_minus)


def update_capital(state: BettingState, x: float, cfg: BettingConfig) -> BettingState:
    """Fold X_t into every capital process, then into the plug-in statistics."""
    x = check_observation(x, state.stats.t + 1)
    lam = predictable_fraction(state.stats, cfg.alpha)
    lam_plus, lam_minus = truncated_fractions(state, lam)

    deviation = x - state.grid
    state.log_cap_plus += np.log1p(lam_plus * deviation)
    state.log_cap_minus += np.log1p(-lam_minus * deviation)
    np.maximum(state.max_log_wealth, hedged_log_wealth_grid(state, cfg), out=state.max_log_wealth)

    state.stats.update(x)
    return state


def hedged_log_wealth_grid(state: BettingState, cfg: BettingConfig) -> np.ndarray:
    """log max(theta K^+, (1-theta) K^-) for every grid point."""
    log_up, log_down = _log_weights(cfg.theta)
    return np.maximum(log_up + state.log_cap_plus, log_down + state.log_cap_minus)


def hedged_log_wealth(state: BettingState, m_index: int, cfg: BettingConfig) -> float:
    """Hedged wealth M_t(m_j), reported in log space."""
    if not 0 <= m_index < state.grid.size:
        raise IndexError(f"grid index {m_index} outside [0, {state.grid.size - 1}]")
    log_up, log_down = _log_weights(cfg.theta)
    return max(
        log_up + float(state.log_cap_plus[m_index]),
        log_down + float(state.log_cap_minus[m_index]),
    )


def rejection_threshold(alpha: float) -> float:
    """log(1/alpha): a candidate is excluded once its log-wealth reaches this."""
    return -math.log(alpha)


def step_set(state: BettingState, cfg: BettingConfig) -> Interval:
    """Convex hull of the grid points whose hedged wealth is below 1/alpha."""
    surviving = np.flatnonzero(hedged_log_wealth_grid(state, cfg) < rejection_threshold(cfg.alpha))
    if surviving.size == 0:
        return Interval.EMPTY
    return Interval(float(state.grid[surviving[0]]), float(state.grid[surviving[-1]]))


def current_set(state: BettingState, cfg: BettingConfig) -> Interval:
    """Push this step's hull into the running intersection and return C_t."""
    state.ri = state.ri.push(clip_unit(step_set(state, cfg)))
    return state.ri.current


def ever_rejected(state: BettingState, cfg: BettingConfig) -> np.ndarray:
    """Mask of grid points whose wealth reached 1/alpha at some s <= t."""
    return state.max_log_wealth >= rejection_threshold(cfg.alpha)


class BettingCS(ConfidenceSequence):
    """Streaming hedged-capital confidence sequence over a fixed grid."""

    method = Method.BETTING

    def __init__(self, cfg: BettingConfig):
        super().__init__(cfg.alpha)
        self.cfg = cfg
        self.state = BettingState.initial(cfg)

    @property
    def t(self) -> int:
        return self.state.stats.t

    @property
    def interval(self) -> Interval:
        return self.state.ri.current

    def update(self, x: float) -> Interval:
        update_capital(self.state, x, self.cfg)
        interval = current_set(self.state, self.cfg)
        if self.state.ri.became_empty:
            self._log_emptied()
        return interval

    def log_wealth(self, m_index: int) -> float:
        return hedged_log_wealth(self.state, m_index, self.cfg)

    def grid_index(self, m: float) -> int:
        """Nearest grid index to candidate mean m."""
        return int(round(m * self.cfg.grid_size))
