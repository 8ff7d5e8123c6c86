"""Cumulative functions, moments and distances for hook distributions."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .asymptotics import TheoremParams, theorem1_params, theorem2_params
from .distribution import Flavor, HookDistribution
from .numeric import logsumexp
from .qseries import hook_distribution
from .special import LimitModel

Number = Union[int, Fraction, float]


def _ratio(num: Number, den: Number) -> Fraction | float:
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return float(num) / float(den)


def cumulative(dist: HookDistribution, k: float) -> Fraction | float:
    """Share of partitions with at most ``floor(k)`` hooks of the given kind."""
    if k == math.inf:
        return _ratio(dist.total, dist.total)
    if k == -math.inf:
        return _ratio(0, dist.total)
    cut = math.floor(k)
    acc = sum(c for m, c in dist.counts.items() if m <= cut)
    return _ratio(acc, dist.total)


@dataclass(frozen=True)
class Moments:
    mean: Fraction | float
    variance: Fraction | float
    mode: int


def exact_moments(dist: HookDistribution) -> Moments:
    """Mean and variance (rational for exact counts) and the smallest modal m."""
    total = dist.total
    s1 = sum(m * c for m, c in dist.counts.items())
    s2 = sum(m * m * c for m, c in dist.counts.items())
    mean = _ratio(s1, total)
    variance = _ratio(s2, total) - mean * mean
    top = max(dist.counts.values())
    mode = min(m for m, c in dist.counts.items() if c == top)
    return Moments(mean, variance, mode)


def mgf(dist: HookDistribution, center: float, spread: float, r: float) -> float:
    """``(1/total) * sum_m count_m * exp((m - center) r / spread)``."""
    if not spread > 0:
        raise ValueError("spread must be positive")
    if r == 0:
        return 1.0
    logs = [math.log(c) + (m - center) * r / spread for m, c in dist.counts.items()]
    return math.exp(logsumexp(logs) - math.log(dist.total))


@dataclass(frozen=True)
class StandardizedDistribution:
    """Support points ``(m - center)/spread`` with their probabilities."""

    source: HookDistribution
    center: float
    spread: float
    points: tuple[float, ...]
    probabilities: tuple[Fraction | float, ...]

    def cdf_steps(self) -> list[tuple[float, float]]:
        """(x, CDF just after x) for every support point, in float."""
        out = []
        acc: Fraction | float = 0
        for x, p in zip(self.points, self.probabilities):
            acc += p
            out.append((x, float(acc)))
        return out

    def cdf(self, x: float) -> float:
        i = bisect.bisect_right(self.points, x)
        return float(sum(self.probabilities[:i]))


def standardize(
    dist: HookDistribution, params: TheoremParams | None = None,
    center: float | None = None, spread: float | None = None,
) -> StandardizedDistribution:
    """Rescale the support by ``(m - mean)/sigma`` from ``params`` (or explicit values)."""
    if params is not None:
        center, spread = params.mean, params.sigma
    if center is None or spread is None:
        raise ValueError("need params or both center and spread")
    if not spread > 0:
        raise ValueError("spread must be positive")
    probs = dist.probabilities()
    ms = sorted(probs)
    return StandardizedDistribution(
        dist, center, spread,
        tuple((m - center) / spread for m in ms),
        tuple(probs[m] for m in ms),
    )


def ks_distance(std: StandardizedDistribution, model: LimitModel) -> float:
    """Sup-distance between the step CDF and the model CDF.

    The model is compared with both one-sided limits of the step function at
    each jump; between jumps the step is flat while the model is monotone, so
    the supremum is attained at a jump.
    """
    worst = 0.0
    before = 0.0
    for x, after in std.cdf_steps():
        f = model.cdf(x)
        worst = max(worst, abs(f - before), abs(f - after))
        before = after
    return worst


def theorem_params(n: int, t: int, flavor: Flavor | str, orientation: str = "right") -> TheoremParams:
    if Flavor.parse(flavor) is Flavor.EQUAL:
        return theorem1_params(n, t)
    return theorem2_params(n, t, orientation)


@dataclass(frozen=True)
class TableRow:
    x: float
    k: int
    D: Fraction | float
    limit: float

    @property
    def ratio(self) -> float:
        return float(self.D) / self.limit if self.limit else math.nan


def table_row(
    n: int, t: int, flavor: Flavor | str, x: float,
    dist: HookDistribution | None = None, ring: str = "exact",
) -> TableRow:
    """D at ``k = floor(mean + sigma x)`` from the asymptotic parameters, beside the limit CDF."""
    params = theorem_params(n, t, flavor)
    if dist is None:
        dist = hook_distribution(n, t, flavor, ring)
    k = math.floor(params.k_of(x))
    return TableRow(x, k, cumulative(dist, k), params.limit.cdf(x))
