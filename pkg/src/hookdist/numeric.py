"""Log-scaled reals for quantities that overflow doubles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class LogReal:
    """The real number ``sign * exp(log_abs)``."""

    log_abs: float
    sign: int = 1

    @classmethod
    def from_float(cls, x: float) -> "LogReal":
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    @classmethod
    def from_int(cls, x: int) -> "LogReal":
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_abs)
        except OverflowError:
            return self.sign * math.inf

    def mantissa_exponent(self) -> tuple[float, int]:
        """Decimal form ``(m, e)`` with ``value = m * 10**e`` and ``1 <= |m| < 10``."""
        if self.sign == 0:
            return 0.0, 0
        log10 = self.log_abs / math.log(10)
        e = math.floor(log10)
        return self.sign * 10 ** (log10 - e), e

    def ratio(self, other: "LogReal") -> float:
        """``self / other`` as a float (both must be nonzero)."""
        return self.sign * other.sign * math.exp(self.log_abs - other.log_abs)

    def __str__(self) -> str:
        m, e = self.mantissa_exponent()
        return f"{m:.12g}e{e:+d}"


def logsumexp(values: Iterable[float]) -> float:
    vals = [v for v in values if v != -math.inf]
    if not vals:
        return -math.inf
    top = max(vals)
    return top + math.log(math.fsum(math.exp(v - top) for v in vals))
