"""Real special functions for the limiting laws.

Accuracy target is 1e-12 absolute on the ranges used here. The error
function and Gamma function come from :mod:`math`; the dilogarithm and the
incomplete gamma function are computed directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PI2_6 = math.pi**2 / 6

_EPS = 1e-16
_MAX_ITER = 10_000


def normal_cdf(x: float) -> float:
    """Standard normal CDF, ``E(x) = (1/sqrt(2 pi)) int_{-inf}^x exp(-y^2/2) dy``."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _dilog_series(x: float) -> float:
    # |x| <= 1/2: terms shrink at least like 2^-k / k^2
    total, power, k = 0.0, x, 1
    while True:
        term = power / (k * k)
        total += term
        if abs(term) <= _EPS * abs(total) or k > 200:
            return total
        k += 1
        power *= x


def dilog(x: float) -> float:
    """Real dilogarithm ``Li2(x) = -int_0^x log(1-u)/u du`` for ``x <= 1``."""
    if x > 1.0:
        raise ValueError(f"dilog is real only for x <= 1, got {x}")
    if x == 1.0:
        return PI2_6
    if x == 0.0:
        return 0.0
    if -0.5 <= x <= 0.5:
        return _dilog_series(x)
    if x > 0.5:
        return PI2_6 - math.log(x) * math.log1p(-x) - _dilog_series(1.0 - x)
    # x < -1/2: Landen maps to y = x/(x-1) in (1/3, 1)
    y = x / (x - 1.0)
    half_log_sq = 0.5 * math.log1p(-x) ** 2
    if y <= 0.5:
        return -_dilog_series(y) - half_log_sq
    li_y = PI2_6 - math.log(y) * math.log1p(-y) - _dilog_series(1.0 - y)
    return -li_y - half_log_sq


def c_of_T(T: float) -> float:
    """``c(T) = sqrt(pi^2/6 - Li2(1 - T))``, positive and increasing for T > 0."""
    if not T > 0:
        raise ValueError(f"c(T) needs T > 0, got {T}")
    return math.sqrt(PI2_6 - dilog(1.0 - T))


def _check_gamma_args(s: float, x: float) -> None:
    if not s > 0:
        raise ValueError(f"shape must be positive, got {s}")
    if x < 0:
        raise ValueError(f"argument must be nonnegative, got {x}")


def _gamma_p_series(s: float, x: float) -> float:
    term = total = 1.0 / s
    a = s
    for _ in range(_MAX_ITER):
        a += 1.0
        term *= x / a
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + s * math.log(x) - math.lgamma(s))


def _gamma_q_contfrac(s: float, x: float) -> float:
    # modified Lentz evaluation of the continued fraction for Q(s, x)
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(-x + s * math.log(x) - math.lgamma(s))


def regularized_lower_gamma(s: float, x: float) -> float:
    """``P(s, x) = gamma(s, x) / Gamma(s)``."""
    _check_gamma_args(s, x)
    if x == 0:
        return 0.0
    if x < s + 1.0:
        return _gamma_p_series(s, x)
    return 1.0 - _gamma_q_contfrac(s, x)


def lower_incomplete_gamma(s: float, x: float) -> float:
    """``gamma(s, x) = int_0^x u^(s-1) e^(-u) du``."""
    return regularized_lower_gamma(s, x) * math.gamma(s)


def gamma_pdf(k: float, theta: float, x: float) -> float:
    if not (k > 0 and theta > 0):
        raise ValueError(f"need k > 0 and theta > 0, got k={k}, theta={theta}")
    if x <= 0:
        return 0.0
    return math.exp((k - 1) * math.log(x) - x / theta - math.lgamma(k) - k * math.log(theta))


def gamma_cdf(k: float, theta: float, x: float) -> float:
    if not (k > 0 and theta > 0):
        raise ValueError(f"need k > 0 and theta > 0, got k={k}, theta={theta}")
    if x <= 0:
        return 0.0
    return regularized_lower_gamma(k, x / theta)


@dataclass(frozen=True)
class LimitModel:
    """A limiting law: ``normal(mean, variance)`` or ``a*X + b`` with X ~ Gamma(shape, scale)."""

    kind: str
    mean: float = 0.0
    variance: float = 1.0
    shape: float = 1.0
    scale: float = 1.0
    a: float = 1.0
    b: float = 0.0

    def __post_init__(self) -> None:
        if self.kind == "normal":
            if not self.variance > 0:
                raise ValueError("normal model needs positive variance")
        elif self.kind == "shifted-gamma":
            if not (self.shape > 0 and self.scale > 0):
                raise ValueError("gamma model needs positive shape and scale")
            if self.a == 0:
                raise ValueError("affine factor a must be nonzero")
        else:
            raise ValueError(f"unknown model kind {self.kind!r}")

    @classmethod
    def normal(cls, mean: float = 0.0, variance: float = 1.0) -> "LimitModel":
        return cls("normal", mean=mean, variance=variance)

    @classmethod
    def shifted_gamma(cls, shape: float, scale: float, a: float = 1.0, b: float = 0.0) -> "LimitModel":
        return cls("shifted-gamma", shape=shape, scale=scale, a=a, b=b)

    def cdf(self, x: float) -> float:
        return limit_cdf(self, x)


def limit_cdf(model: LimitModel, x: float) -> float:
    """CDF of ``model`` at ``x``; always nondecreasing with limits 0 and 1."""
    if model.kind == "normal":
        return normal_cdf((x - model.mean) / math.sqrt(model.variance))
    y = (x - model.b) / model.a
    if model.a > 0:
        return gamma_cdf(model.shape, model.scale, y)
    # a < 0 reverses the order; the gamma law is continuous so < and <= agree
    return 1.0 - gamma_cdf(model.shape, model.scale, y)
