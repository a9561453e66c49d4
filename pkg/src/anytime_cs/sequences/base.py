"""Common interface of the streaming confidence-sequence engines."""

import math
from abc import ABC, abstractmethod
from typing import ClassVar, Iterable, Iterator

import structlog

from anytime_cs.exceptions import DataContractError
from anytime_cs.models import Interval, Method

logger = structlog.get_logger()


def check_observation(x: float, t: int) -> float:
    """Return x as float, rejecting anything outside [0, 1] (NaN included)."""
    x = float(x)
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise DataContractError(f"observation at t={t} outside [0, 1]: {x}")
    return x


class ConfidenceSequence(ABC):
    """A single-stream engine: feed X_t in order, read C_t after each step."""

    method: ClassVar[Method]

    def __init__(self, alpha: float):
        self.alpha = alpha
        self.log = logger.bind(component=f"{self.method.value}_cs")

    @property
    @abstractmethod
    def t(self) -> int:
        """Number of observations consumed."""

    @property
    @abstractmethod
    def interval(self) -> Interval:
        """C_t for the current t ([0, 1] before any data)."""

    @abstractmethod
    def update(self, x: float) -> Interval:
        """Consume X_{t+1} and return C_{t+1}."""

    def run(self, xs: Iterable[float]) -> Iterator[Interval]:
        for x in xs:
            yield self.update(x)

    def _log_emptied(self) -> None:
        self.log.warning("empty_intersection", method=self.method.value, t=self.t)
