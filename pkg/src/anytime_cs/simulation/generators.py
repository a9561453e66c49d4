"""Seeded stream generators: Marsaglia-Tsang gamma, Beta and Bernoulli streams."""

import math
from typing import List, Tuple

import numpy as np

from anytime_cs.models import SimulationTruth, StreamRecord
from anytime_cs.rng import STREAM_DATA, substream


def standard_gamma(rng: np.random.Generator, shape: float, size: int) -> np.ndarray:
    """Gamma(shape, 1) draws by Marsaglia and Tsang's squeeze-free rejection method.

    For shape < 1 the Gamma(shape + 1) draw is boosted by U^(1/shape).
    """
    if shape <= 0.0:
        raise ValueError(f"gamma shape must be positive, got {shape}")
    if shape < 1.0:
        boosted = standard_gamma(rng, shape + 1.0, size)
        return boosted * rng.random(size) ** (1.0 / shape)

    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    out = np.empty(size, dtype=np.float64)
    filled = 0
    while filled < size:
        need = size - filled
        batch = need + need // 8 + 16
        z = rng.standard_normal(batch)
        u = rng.random(batch)
        v = (1.0 + c * z) ** 3
        positive = v > 0.0
        log_v = np.full(batch, -np.inf)
        np.log(v, out=log_v, where=positive)
        with np.errstate(divide="ignore"):
            accept = positive & (np.log(u) < 0.5 * z * z + d - d * v + d * log_v)
        accepted = (d * v)[accept][:need]
        out[filled : filled + accepted.size] = accepted
        filled += accepted.size
    return out


def beta_draws(rng: np.random.Generator, a: float, b: float, n: int) -> np.ndarray:
    """Beta(a, b) draws as G_a / (G_a + G_b)."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"beta shapes must be positive, got a={a}, b={b}")
    ga = standard_gamma(rng, a, n)
    gb = standard_gamma(rng, b, n)
    return ga / (ga + gb)


def bernoulli_draws(rng: np.random.Generator, p: float, n: int) -> np.ndarray:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bernoulli p outside [0, 1]: {p}")
    return (rng.random(n) < p).astype(np.float64)


def draw_stream(truth: SimulationTruth, n: int, seed: int, key: Tuple[int, ...] = ()) -> np.ndarray:
    """Observations of `truth` from the data substream (seed, *key)."""
    if n < 1:
        raise ValueError(f"stream length must be >= 1, got {n}")
    rng = substream(seed, STREAM_DATA, *key)
    if truth.family == "beta":
        return beta_draws(rng, truth.a, truth.b, n)
    return bernoulli_draws(rng, truth.p, n)


def to_records(xs: np.ndarray) -> List[StreamRecord]:
    return [StreamRecord(t, float(x)) for t, x in enumerate(xs, start=1)]


def gen_beta_stream(
    a: float = 10.0, b: float = 30.0, n: int = 10_000, seed: int = 0, key: Tuple[int, ...] = ()
) -> List[StreamRecord]:
    """n i.i.d. Beta(a, b) observations, deterministic given (seed, key)."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"beta shapes must be positive, got a={a}, b={b}")
    return to_records(draw_stream(SimulationTruth(family="beta", a=a, b=b), n, seed, key))


def gen_bernoulli_stream(
    p: float, n: int, seed: int = 0, key: Tuple[int, ...] = ()
) -> List[StreamRecord]:
    """n i.i.d. Bernoulli(p) observations, deterministic given (seed, key)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bernoulli p outside [0, 1]: {p}")
    return to_records(draw_stream(SimulationTruth(family="bernoulli", p=p), n, seed, key))
