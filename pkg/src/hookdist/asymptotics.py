"""Saddle-point diagnostics for the hook generating functions.

Infinite sums are evaluated directly (vectorised, truncated once terms drop
below ~1e-18 of the total) and compared with their closed-form main terms.
Main terms of the coefficient estimates are returned as :class:`LogReal`
because they overflow doubles for moderately large n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .numeric import LogReal
from .special import LimitModel, c_of_T, dilog

_SQRT6 = math.sqrt(6.0)
_TRUNC_LOG = 45.0  # e^-45 ~ 3e-20


def _terms(rate: float) -> np.ndarray:
    """Indices 1..N with N large enough that e^(-rate*N) * N^3 is negligible."""
    if not rate > 0:
        raise ValueError("decay rate must be positive")
    N = int((_TRUNC_LOG + 3 * math.log1p(1.0 / rate)) / rate) + 2
    return np.arange(1, N + 1, dtype=float)


def _fsum(values: np.ndarray) -> float:
    return math.fsum(values.tolist())


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")


def _check_t(t: int) -> None:
    if int(t) != t or t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")


def _li_ratio(T: float) -> float:
    """``Li2(1 - T) / (T - 1)``, continuous at T = 1 where it equals -1."""
    u = T - 1.0
    if abs(u) < 1e-6:
        # Li2(-u)/u = -1 + u/4 - u^2/9 + ...
        return -1.0 + u / 4.0 - u * u / 9.0
    return dilog(-u) / u


@dataclass(frozen=True)
class EMSums:
    """Directly summed series next to their closed-form main terms.

    Keys ``a0``, ``a``, ``b``, ``c`` name the four sums.
    """

    alpha: float
    t: int
    T: float
    sums: dict[str, float]
    main: dict[str, float]

    def error(self, key: str) -> float:
        return abs(self.sums[key] - self.main[key])


def em_sums(alpha: float, t: int, T: float) -> EMSums:
    """Evaluate the four Euler-Maclaurin sums at ``alpha`` and their main terms.

    a0: sum log(1 - e^(-j alpha))
    a:  sum t^2 j (T-1) / (T - 1 + e^(t j alpha))
    b:  sum log(1 + (T-1) e^(-t j alpha))
    c:  sum t^3 j^2 e^(-t j alpha) / (1 + (T-1) e^(-t j alpha))^2
    """
    _check_alpha(alpha)
    _check_t(t)
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    u = T - 1.0
    j = _terms(alpha)
    a0 = _fsum(np.log(-np.expm1(-j * alpha)))
    jt = _terms(t * alpha)
    x = np.exp(-t * jt * alpha)
    a = _fsum(t * t * jt * u * x / (1.0 + u * x))
    b = _fsum(np.log1p(u * x))
    c = _fsum(t**3 * jt * jt * x / (1.0 + u * x) ** 2)
    li = dilog(1.0 - T)
    main = {
        "a0": -math.pi**2 / (6 * alpha) - 0.5 * math.log(alpha / (2 * math.pi)),
        "a": -li / alpha**2,
        "b": -li / (t * alpha) - 0.5 * math.log(T),
        "c": -2.0 / alpha**3 * _li_ratio(T),
    }
    return EMSums(alpha, t, T, {"a0": a0, "a": a, "b": b, "c": c}, main)


@dataclass(frozen=True)
class AuxSums:
    alpha: float
    first: float
    second: float
    first_main: float
    second_main: float


def aux_sums(alpha: float) -> AuxSums:
    """``sum j/(e^(j alpha) - 1)`` and ``sum j^2 e^(-j alpha)/(1 - e^(-j alpha))^2``."""
    _check_alpha(alpha)
    j = _terms(alpha)
    em1 = np.expm1(j * alpha)
    first = _fsum(j / em1)
    # e^-x / (1 - e^-x)^2 = e^x / (e^x - 1)^2
    second = _fsum(j * j * (em1 + 1.0) / em1**2)
    return AuxSums(
        alpha,
        first,
        second,
        math.pi**2 / (6 * alpha**2) - 1 / (2 * alpha),
        math.pi**2 / (3 * alpha**3) - 1 / (2 * alpha**2),
    )


@dataclass(frozen=True)
class SaddleSolution:
    """A solved saddle point ``z = e^(-alpha)``.

    ``param`` is T for the t-hook series and alpha(T) for the multiples series.
    """

    n: int
    t: int
    param: float
    alpha: float
    residual: float
    expansion_value: float

    @property
    def scaled_gap(self) -> float:
        """``|alpha - expansion| * n^(3/2)``."""
        return abs(self.alpha - self.expansion_value) * self.n**1.5


def _bisect(
    lhs: Callable[[float], float], target: float, lo: float, hi: float, rel_tol: float
) -> float:
    """Root of the decreasing function ``lhs - target`` in [lo, hi]."""
    if not lhs(lo) > target:
        raise ArithmeticError("saddle bracket: lower end does not exceed target")
    for _ in range(200):
        if lhs(hi) < target:
            break
        lo, hi = hi, hi * 2
    else:
        raise ArithmeticError("saddle bracket: could not enclose a root")
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if lhs(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _saddle_lhs_G(t: int, T: float) -> Callable[[float], float]:
    u = T - 1.0

    def lhs(a: float) -> float:
        j = _terms(a)
        base = _fsum(j / np.expm1(j * a))
        if u == 0:
            return base
        jt = _terms(t * a)
        x = np.exp(-t * jt * a)
        return base + _fsum(t * t * jt * u * x / (1.0 + u * x))

    return lhs


def solve_saddle_G(n: int, t: int, T: float, tol: float = 1e-13) -> SaddleSolution:
    """Solve ``sum t^2 j (T-1)/(T-1+e^(tj a)) + sum j/(e^(j a)-1) = n`` for a > 0."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    lhs = _saddle_lhs_G(t, T)
    alpha = _bisect(lhs, n, 1.0 / n, 0.5, tol)
    expansion = c_of_T(T) / math.sqrt(n) - 1.0 / (4 * n)
    return SaddleSolution(n, t, T, alpha, lhs(alpha) - n, expansion)


def _saddle_lhs_Ghat(t: int, log_Tn: float) -> Callable[[float], float]:
    def lhs(b: float) -> float:
        j = _terms(b)
        out = _fsum(j / np.expm1(j * b))
        if log_Tn == 0:
            return out
        gap = t * b - log_Tn
        jg = _terms(gap)
        jt = _terms(t * b)
        # sum t^2 j T^j/(e^(tjb) - T^j) = sum t^2 j / (e^(j (tb - log T)) - 1)
        out += _fsum(t * t * jg / np.expm1(jg * gap))
        out -= _fsum(t * t * jt / np.expm1(jt * t * b))
        return out

    return lhs


def _check_ghat_domain(t: int, alpha_T: float) -> None:
    if not math.pi * t + _SQRT6 * alpha_T > 0:
        raise ValueError(
            f"need pi*t + sqrt(6)*alpha(T) > 0, got t={t}, alpha(T)={alpha_T}"
        )


def solve_saddle_Ghat(n: int, t: int, alphaT: float, tol: float = 1e-13) -> SaddleSolution:
    """Saddle ``z = e^(-beta_n)`` of the multiples series at ``T_n = e^(alphaT / sqrt n)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    _check_ghat_domain(t, alphaT)
    log_Tn = alphaT / math.sqrt(n)
    lhs = _saddle_lhs_Ghat(t, log_Tn)
    # the series converges only for t*beta > log T_n
    lo = max(1.0 / n, log_Tn / t + 1.0 / n)
    beta = _bisect(lhs, n, lo, max(2 * lo, 0.5), tol)
    expansion = (math.pi / _SQRT6 + alphaT / t) / math.sqrt(n)
    return SaddleSolution(n, t, alphaT, beta, lhs(beta) - n, expansion)


def prop1_main_term(n: int, t: int, T: float) -> LogReal:
    """``c(T) / (2 sqrt2 pi n T^(t/2)) * exp(c(T) (2 sqrt n - 1/sqrt n))``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    c = c_of_T(T)
    log_val = (
        math.log(c)
        - math.log(2 * math.sqrt(2) * math.pi * n)
        - 0.5 * t * math.log(T)
        + c * (2 * math.sqrt(n) - 1 / math.sqrt(n))
    )
    return LogReal(log_val, 1)


def prop2_main_term(n: int, t: int, alphaT: float, epsT: float = 0.0) -> LogReal:
    """Main term of the multiples series at ``T_n = e^((alphaT + epsT)/sqrt n)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    a = alphaT + epsT
    _check_ghat_domain(t, a)
    pt = math.pi * t
    log_val = (
        -math.log(2**1.75 * 3**0.25 * n)
        + 0.5 * math.log(1 / _SQRT6 + a / pt)
        + 0.5 * t * math.log(pt / (pt + _SQRT6 * a))
        + math.pi * math.sqrt(n) * (math.sqrt(2 / 3) + a / pt)
    )
    return LogReal(log_val, 1)


def hardy_ramanujan(n: int) -> LogReal:
    """``e^(pi sqrt(2n/3)) / (4 sqrt3 n)``."""
    return LogReal(math.pi * math.sqrt(2 * n / 3) - math.log(4 * math.sqrt(3) * n), 1)


#: Orientations of the shifted-gamma limit. ``right`` is X - sqrt(k), with CDF
#: gamma(k; sqrt(k) x + k)/Gamma(k); ``left`` is sqrt(k) - X, whose MGF is
#: e^(sqrt(k) r)/(1 + theta r)^k.
ORIENTATIONS = ("right", "left")


@dataclass(frozen=True)
class TheoremParams:
    """Asymptotic location, spread and limit law of a hook statistic."""

    n: int
    t: int
    flavor: str
    mean: float
    variance: float
    mode: float | None
    limit: LimitModel
    shape: float | None = None
    scale: float | None = None
    a: float | None = None
    b: float | None = None

    @property
    def sigma(self) -> float:
        return math.sqrt(self.variance)

    def k_of(self, x: float) -> float:
        """``mean + sigma * x``."""
        return self.mean + self.sigma * x


def theorem1_params(n: int, t: int) -> TheoremParams:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    root = math.sqrt(6 * n)
    mean = root / math.pi - t / 2
    variance = (math.pi**2 - 6) * root / (2 * math.pi**3)
    return TheoremParams(n, t, "equal", mean, variance, None, LimitModel.normal())


def theorem2_params(n: int, t: int, orientation: str = "right") -> TheoremParams:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_t(t)
    if t < 4:
        raise ValueError(
            f"t={t}: the shifted-gamma limit needs shape (t-1)/2 > 1, i.e. t >= 4; "
            "for t in {2, 3} the distributions have no continuous limit"
        )
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    root = math.sqrt(6 * n)
    mean = n / t - (t - 1) * root / (2 * math.pi * t)
    mode = n / t - (t - 3) * root / (2 * math.pi * t)
    variance = 3 * (t - 1) * n / (math.pi**2 * t**2)
    k = (t - 1) / 2
    theta = math.sqrt(2 / (t - 1))
    a, b = (1.0, -math.sqrt(k)) if orientation == "right" else (-1.0, math.sqrt(k))
    limit = LimitModel.shifted_gamma(k, theta, a, b)
    return TheoremParams(n, t, "multiple", mean, variance, mode, limit, k, theta, a, b)


def theorem2_limit_mgf(t: int, r: float) -> float:
    """MGF of the left-skewed limit ``sqrt(k) - X``: ``e^(b r) / (1 + theta r)^k``."""
    k = (t - 1) / 2
    theta = math.sqrt(2 / (t - 1))
    if not 1 + theta * r > 0:
        raise ValueError("r outside the MGF's domain")
    return math.exp(math.sqrt(k) * r) / (1 + theta * r) ** k
