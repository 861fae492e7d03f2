"""Mean / standard-deviation aggregation for score tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import EmptyCorpusError


@dataclass(frozen=True)
class ScoreStats:
    n: int
    mu: float
    sigma: float

    def to_dict(self) -> dict:
        return {"n": self.n, "mu": self.mu, "sigma": self.sigma}


def aggregate_stats(scores: Sequence[float]) -> ScoreStats:
    """Mean and sample (n-1) standard deviation; sigma is 0 for a single score."""
    if not scores:
        raise EmptyCorpusError("no scores to aggregate")
    n = len(scores)
    mu = math.fsum(scores) / n
    if n == 1:
        return ScoreStats(n=1, mu=mu, sigma=0.0)
    variance = math.fsum((s - mu) ** 2 for s in scores) / (n - 1)
    return ScoreStats(n=n, mu=mu, sigma=math.sqrt(variance))
