"""Domain models for confidence sequences and experiments."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from anytime_cs.exceptions import DataContractError


class Method(str, Enum):
    """Confidence-sequence engines."""

    BETTING = "betting"
    PREB = "preb"
    BOOTSTRAP = "bootstrap"


@dataclass(frozen=True, slots=True, eq=False)
class Interval:
    """Closed interval [lo, hi], or the explicit empty set.

    Bounds may leave [0, 1] before clipping (closed-form radii do). The empty
    interval has NaN bounds and zero width; use ``Interval.EMPTY``.
    """

    lo: float
    hi: float
    empty: bool = False

    EMPTY: ClassVar["Interval"]

    def __post_init__(self) -> None:
        if self.empty:
            if not (math.isnan(self.lo) and math.isnan(self.hi)):
                raise ValueError("empty interval must carry NaN bounds")
            return
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def unit(cls) -> "Interval":
        return cls(0.0, 1.0)

    @property
    def width(self) -> float:
        if self.empty:
            return 0.0
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return not self.empty and self.lo <= x <= self.hi

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        if self.empty or other.empty:
            return self.empty and other.empty
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash(("empty",)) if self.empty else hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return "Interval.EMPTY" if self.empty else f"Interval({self.lo!r}, {self.hi!r})"


Interval.EMPTY = Interval(math.nan, math.nan, empty=True)


@dataclass(frozen=True, slots=True)
class StreamRecord:
    """One observation X_t of a stream."""

    t: int
    x: float

    def __post_init__(self) -> None:
        if self.t < 1:
            raise DataContractError(f"time index must be >= 1, got {self.t}")
        if not 0.0 <= self.x <= 1.0:
            raise DataContractError(f"observation at t={self.t} outside [0, 1]: {self.x}")


class CsConfig(BaseModel):
    """Miscoverage budget and horizon shared by all engines."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(default=0.05, gt=0.0, lt=1.0, description="Miscoverage budget")
    horizon: int = Field(default=10_000, ge=1, description="Maximum time index")


class BettingConfig(BaseModel):
    """Hedged capital process settings."""

    model_config = ConfigDict(frozen=True)

    grid_size: int = Field(default=1000, ge=2, description="Candidate means m = j/G, j=0..G")
    theta: float = Field(default=0.5, ge=0.0, le=1.0, description="Hedge weight")
    trunc: float = Field(default=0.5, gt=0.0, lt=1.0, description="Betting fraction truncation c")
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)


class BootstrapConfig(BaseModel):
    """Batched percentile bootstrap settings."""

    model_config = ConfigDict(frozen=True)

    replicates: int = Field(default=200, ge=2, description="Bootstrap replicates B")
    batches: int = Field(default=10, ge=1, description="Dyadic batches L")
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    window: Literal["prefix", "batch"] = Field(
        default="prefix", description="Resample the full prefix or only the current batch"
    )
    stride: int = Field(
        default=1, ge=1, description="Recompute the CI every `stride` steps once t reaches it"
    )

    @property
    def levels(self) -> Tuple[float, float]:
        """Quantile levels alpha/(2L) and 1 - alpha/(2L)."""
        tail = self.alpha / (2 * self.batches)
        return tail, 1.0 - tail


class SimulationTruth(BaseModel):
    """Generating distribution of a simulated stream and its true mean."""

    model_config = ConfigDict(frozen=True)

    family: Literal["beta", "bernoulli"]
    a: float = Field(default=10.0, gt=0.0)
    b: float = Field(default=30.0, gt=0.0)
    p: float = Field(default=0.5, ge=0.0, le=1.0)

    @computed_field
    @property
    def mu_true(self) -> float:
        if self.family == "beta":
            return self.a / (self.a + self.b)
        return self.p


class PlayerRecord(BaseModel):
    """One row of the baseball dataset."""

    model_config = ConfigDict(frozen=True)

    player_id: int = Field(ge=1)
    name: str = Field(min_length=1)
    hits_45: int = Field(ge=0)
    at_bats: int = Field(default=45, ge=1)
    p_true: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _hits_within_at_bats(self) -> "PlayerRecord":
        if self.hits_45 > self.at_bats:
            raise ValueError(f"hits_45={self.hits_45} exceeds at_bats={self.at_bats}")
        return self

    @computed_field
    @property
    def p_hat45(self) -> float:
        return self.hits_45 / self.at_bats


@dataclass(frozen=True, slots=True)
class ExperimentRecord:
    """Per-step snapshot of one engine on one replication."""

    method: Method
    t: int
    lo: float
    hi: float
    width: float
    replication: int
    seed: int

    @classmethod
    def from_interval(
        cls, method: Method, t: int, interval: Interval, replication: int, seed: int
    ) -> "ExperimentRecord":
        return cls(method, t, interval.lo, interval.hi, interval.width, replication, seed)

    @property
    def sort_key(self) -> Tuple[int, str, int]:
        return (self.replication, self.method.value, self.t)


class UniformCoverage(BaseModel):
    """Time-uniform miscoverage of one method over simulated streams."""

    model_config = ConfigDict(frozen=True)

    method: Method
    mu_true: float
    horizon: int = Field(ge=1)
    replications: int = Field(ge=1)
    miscoverage: float = Field(ge=0.0, le=1.0, description="Fraction ever excluding mu_true")


class CoverageSummary(BaseModel):
    """Coverage of one unit (player or stream) by one method over R replications."""

    model_config = ConfigDict(frozen=True)

    unit_id: int
    method: Method
    coverage_prob: float = Field(ge=0.0, le=1.0)
    mean_lo: float
    mean_hi: float
    replications: int = Field(ge=1)
