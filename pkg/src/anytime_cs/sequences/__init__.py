"""Confidence-sequence engines."""

from anytime_cs.models import BettingConfig, BootstrapConfig, CsConfig, Method

from .base import ConfidenceSequence
from .bernstein import PrEbCS
from .betting import BettingCS
from .bootstrap import BootstrapCS
from .intervals import RunningIntersection, clip_unit, intersect, push_step


def make_engine(
    method: Method,
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    stream_id: int = 0,
) -> ConfidenceSequence:
    """Fresh engine for one stream; alpha always comes from `cfg`."""
    if method is Method.BETTING:
        return BettingCS(bcfg.model_copy(update={"alpha": cfg.alpha}))
    if method is Method.PREB:
        return PrEbCS(cfg.alpha)
    return BootstrapCS(bscfg.model_copy(update={"alpha": cfg.alpha}), stream_id=stream_id)


__all__ = [
    "BettingCS",
    "BootstrapCS",
    "ConfidenceSequence",
    "PrEbCS",
    "RunningIntersection",
    "clip_unit",
    "intersect",
    "make_engine",
    "push_step",
]
