"""Predictable plug-in statistics and the betting fraction built from them.

Regularised running moments:

    mu_hat_t    = (1/2 + sum_{i<=t} X_i) / (t + 1)
    sigma2_hat_t = (1/4 + sum_{i<=t} (X_i - mu_hat_i)^2) / (t + 1)

with mu_hat_0 = 1/2 and sigma2_hat_0 = 1/4, so the variance never reaches zero.
"""

import math
from dataclasses import dataclass


@dataclass
class PredictableStats:
    """Running moments over X_1..X_t (single owner, updated in place)."""

    t: int = 0
    sum_x: float = 0.0
    sum_sq_dev: float = 0.0

    @property
    def mu_hat(self) -> float:
        return (0.5 + self.sum_x) / (self.t + 1)

    @property
    def var_hat(self) -> float:
        return (0.25 + self.sum_sq_dev) / (self.t + 1)

    def update(self, x: float) -> None:
        self.t += 1
        self.sum_x += x
        self.sum_sq_dev += (x - self.mu_hat) ** 2


def predictable_fraction(stats: PredictableStats, alpha: float) -> float:
    """Untruncated betting fraction for the next observation t = stats.t + 1.

    lambda_t = sqrt(2 log(2/alpha) / (sigma2_hat_{t-1} * t * log(1 + t)))
    """
    t = stats.t + 1
    return math.sqrt(2.0 * math.log(2.0 / alpha) / (stats.var_hat * t * math.log1p(t)))
