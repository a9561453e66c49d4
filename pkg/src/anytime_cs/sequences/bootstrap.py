"""Batched percentile bootstrap confidence sequence.

Time is split into dyadic batches 2^l <= t < 2^(l+1), l = 1..L, each granted
alpha/L of the error budget; within a batch the interval is the
[alpha/(2L), 1 - alpha/(2L)] percentile range of B bootstrap means. The
guarantee is a union bound over batches, so the output is reported as-is,
without a running intersection.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from anytime_cs.exceptions import DataContractError
from anytime_cs.models import BootstrapConfig, Interval, Method, StreamRecord
from anytime_cs.rng import STREAM_BOOTSTRAP, substream
from anytime_cs.sequences.base import ConfidenceSequence, check_observation
from anytime_cs.sequences.intervals import UNIT, clip_unit

ArrayLike = Union[Sequence[float], np.ndarray]


def batch_index(t: int, batches: int) -> int:
    """clamp(floor(log2 t), 1, L)."""
    if t < 1:
        raise ValueError(f"time index must be >= 1, got {t}")
    return min(max(t.bit_length() - 1, 1), batches)


def batch_start(batch: int) -> int:
    """First time index of a batch; batch 1 also owns t = 1."""
    return 1 if batch == 1 else 2**batch


def quantile(values: ArrayLike, q: float) -> float:
    """Linear-interpolation empirical quantile of sorted values.

    h = q (n - 1); result = v[floor(h)] + (h - floor(h)) (v[floor(h)+1] - v[floor(h)]).
    """
    n = len(values)
    if n == 0:
        raise ValueError("quantile of empty input")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"quantile level outside [0, 1]: {q}")
    h = q * (n - 1)
    i = math.floor(h)
    frac = h - i
    if frac == 0.0 or i + 1 >= n:
        return float(values[i])
    lower = float(values[i])
    return lower + frac * (float(values[i + 1]) - lower)


def bootstrap_means(data: np.ndarray, replicates: int, rng: np.random.Generator) -> np.ndarray:
    """Sorted means of `replicates` resamples with replacement; row b is replicate b."""
    idx = rng.integers(0, data.size, size=(replicates, data.size))
    means = data[idx].mean(axis=1)
    means.sort()
    return means


def bootstrap_ci(data: ArrayLike, cfg: BootstrapConfig, rng: np.random.Generator) -> Interval:
    """Percentile bootstrap CI at levels alpha/(2L), 1 - alpha/(2L)."""
    values = np.asarray(data, dtype=np.float64)
    if values.size == 0:
        raise ValueError("bootstrap_ci needs at least one observation")
    means = bootstrap_means(values, cfg.replicates, rng)
    lo_level, hi_level = cfg.levels
    # Resample means lie in [min, max] of the data; clamp away rounding.
    data_min, data_max = float(values.min()), float(values.max())
    lo = min(max(quantile(means, lo_level), data_min), data_max)
    hi = min(max(quantile(means, hi_level), data_min), data_max)
    return clip_unit(Interval(lo, hi))


@dataclass
class BatchState:
    """Observation buffer and dyadic batch bookkeeping of one stream."""

    stream_id: int = 0
    t: int = 0
    current_batch: int = 1
    buffer: np.ndarray = field(default_factory=lambda: np.empty(64, dtype=np.float64))
    last: Interval = UNIT

    @property
    def prefix(self) -> np.ndarray:
        return self.buffer[: self.t]

    def append(self, x: float) -> None:
        if self.t == self.buffer.size:
            grown = np.empty(2 * self.buffer.size, dtype=np.float64)
            grown[: self.t] = self.buffer
            self.buffer = grown
        self.buffer[self.t] = x
        self.t += 1

    def window(self, cfg: BootstrapConfig) -> np.ndarray:
        if cfg.window == "batch":
            return self.buffer[batch_start(self.current_batch) - 1 : self.t]
        return self.prefix


def recompute_due(t: int, cfg: BootstrapConfig) -> bool:
    """Whether the CI at time t is recomputed rather than carried forward."""
    if t < cfg.stride or t % cfg.stride == 0:
        return True
    return t == batch_start(batch_index(t, cfg.batches))


def bootstrap_cs_step(
    state: BatchState,
    record: StreamRecord,
    cfg: BootstrapConfig,
    rng: Optional[np.random.Generator] = None,
) -> Interval:
    """Append X_t and return the bootstrap CI for time t.

    Without an explicit ``rng`` the resampling draws come from the substream
    (cfg.seed, stream_id, t), so the sequence is reproducible step by step.
    """
    if record.t != state.t + 1:
        raise DataContractError(f"expected t={state.t + 1}, got t={record.t}")
    state.append(check_observation(record.x, record.t))
    state.current_batch = batch_index(state.t, cfg.batches)

    if recompute_due(state.t, cfg):
        if rng is None:
            rng = substream(cfg.seed, STREAM_BOOTSTRAP, state.stream_id, state.t)
        state.last = bootstrap_ci(state.window(cfg), cfg, rng)
    return state.last


class BootstrapCS(ConfidenceSequence):
    """Streaming batched bootstrap sequence (no running intersection)."""

    method = Method.BOOTSTRAP

    def __init__(self, cfg: BootstrapConfig, stream_id: int = 0):
        super().__init__(cfg.alpha)
        self.cfg = cfg
        self.state = BatchState(stream_id=stream_id)

    @property
    def t(self) -> int:
        return self.state.t

    @property
    def interval(self) -> Interval:
        return self.state.last

    def update(self, x: float) -> Interval:
        return bootstrap_cs_step(self.state, StreamRecord(self.state.t + 1, x), self.cfg)
