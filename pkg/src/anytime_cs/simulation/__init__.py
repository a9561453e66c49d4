"""Seeded stream generators and the comparison studies."""

from .experiments import (
    ALL_METHODS,
    BASEBALL_METHODS,
    SYNTHETIC_TRUTH,
    final_intervals,
    run_baseball,
    run_coverage_study,
    run_synthetic,
    run_synthetic_replications,
    run_ville_check,
)
from .generators import draw_stream, gen_bernoulli_stream, gen_beta_stream

__all__ = [
    "ALL_METHODS",
    "BASEBALL_METHODS",
    "SYNTHETIC_TRUTH",
    "draw_stream",
    "final_intervals",
    "gen_bernoulli_stream",
    "gen_beta_stream",
    "run_baseball",
    "run_coverage_study",
    "run_synthetic",
    "run_synthetic_replications",
    "run_ville_check",
]
