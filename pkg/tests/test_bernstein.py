"""Tests for the predictable plug-in empirical Bernstein sequence."""

import math

import numpy as np
import pytest

from anytime_cs.exceptions import DataContractError
from anytime_cs.models import Interval, SimulationTruth
from anytime_cs.sequences.bernstein import (
    PrEbCS,
    PrEbState,
    preb_interval,
    preb_step_set,
    preb_update,
    psi_e,
)
from anytime_cs.simulation.generators import draw_stream

ALPHA = 0.05


def _recompute(xs, alpha):
    """Accumulators rebuilt from the stored prefix, term by term."""
    sum_lambda = sum_lambda_x = sum_v_psi = 0.0
    for t in range(1, len(xs) + 1):
        running = sq = 0.0
        for i, x in enumerate(xs[: t - 1], start=1):
            running += x
            sq += (x - (0.5 + running) / (i + 1)) ** 2
        mu_prev = (0.5 + running) / t
        var_prev = (0.25 + sq) / t
        lam = math.sqrt(2 * math.log(2 / alpha) / (var_prev * t * math.log(1 + t)))
        lam = min(lam, 0.5)
        x = xs[t - 1]
        sum_lambda += lam
        sum_lambda_x += lam * x
        sum_v_psi += 4 * (x - mu_prev) ** 2 * (-math.log(1 - lam) - lam) / 4
    return sum_lambda, sum_lambda_x, sum_v_psi


def test_psi_e_values():
    """Test the rate function at reference points."""
    assert psi_e(0.0) == 0.0
    assert psi_e(0.5) == pytest.approx(0.0482868, abs=1e-7)
    assert psi_e(1e-4) / 1e-8 == pytest.approx(1 / 8, rel=1e-3)


def test_psi_e_domain():
    """Test rejection outside [0, 1)."""
    with pytest.raises(ValueError):
        psi_e(1.0)
    with pytest.raises(ValueError):
        psi_e(-0.1)


def test_first_step_worked_example():
    """Test lambda_1 = 0.5, v_1 = 1 and the radius after X_1 = 1."""
    state = preb_update(PrEbState(), 1.0, ALPHA)

    assert state.sum_lambda == 0.5
    assert state.sum_v_psi == pytest.approx(psi_e(0.5))
    step = preb_step_set(state, ALPHA)
    center = (step.lo + step.hi) / 2
    radius = (step.hi - step.lo) / 2
    assert center == pytest.approx(1.0)
    assert radius == pytest.approx((math.log(40) + psi_e(0.5)) / 0.5)
    assert radius == pytest.approx(7.47434, abs=1e-4)
    assert preb_interval(state, ALPHA) == Interval(0.0, 1.0)


def test_zero_deviation_adds_no_penalty():
    """Test that x = mu_hat_{t-1} leaves sum_v_psi unchanged."""
    state = preb_update(PrEbState(), 0.5, ALPHA)

    assert state.sum_v_psi == 0.0


def test_constant_stream_center():
    """Test that a constant stream centres the interval on its value."""
    state = PrEbState()
    for _ in range(50):
        preb_update(state, 0.5, ALPHA)
        step = preb_step_set(state, ALPHA)
        assert (step.lo + step.hi) / 2 == pytest.approx(0.5)


def test_empty_state_is_unit_interval():
    """Test C_0 = [0, 1]."""
    assert preb_interval(PrEbState(), ALPHA) == Interval(0.0, 1.0)
    assert PrEbCS(ALPHA).interval == Interval(0.0, 1.0)


def test_accumulators_match_recomputation():
    """Test running accumulators against a from-scratch rebuild of a 10^3 prefix."""
    xs = [float(x) for x in draw_stream(SimulationTruth(family="beta"), 1000, seed=8)]
    state = PrEbState()
    for x in xs:
        preb_update(state, x, ALPHA)

    sum_lambda, sum_lambda_x, sum_v_psi = _recompute(xs, ALPHA)
    assert state.sum_lambda == pytest.approx(sum_lambda, rel=1e-12)
    assert state.sum_lambda_x == pytest.approx(sum_lambda_x, rel=1e-12)
    assert state.sum_v_psi == pytest.approx(sum_v_psi, rel=1e-12)


def test_widths_non_increasing():
    """Test monotone widths and the coarse width bound at t = 10^4."""
    engine = PrEbCS(ALPHA)
    xs = draw_stream(SimulationTruth(family="beta", a=10, b=30), 10_000, seed=5)
    widths = [engine.update(float(x)).width for x in xs]

    assert all(b <= a for a, b in zip(widths, widths[1:]))
    assert widths[-1] < 0.1


def test_predictability():
    """Test that shuffling future observations leaves past intervals unchanged."""
    xs = draw_stream(SimulationTruth(family="beta", a=10, b=30), 1000, seed=6)
    cut = 200
    shuffled = np.concatenate([xs[:cut], np.random.default_rng(1).permutation(xs[cut:])])
    a = PrEbCS(ALPHA)
    b = PrEbCS(ALPHA)

    first = [a.update(float(x)) for x in xs][:cut]
    second = [b.update(float(x)) for x in shuffled][:cut]
    assert first == second


def test_rejects_bad_observation():
    """Test the data contract."""
    with pytest.raises(DataContractError):
        PrEbCS(ALPHA).update(-0.2)
