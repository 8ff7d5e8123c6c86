"""Dense marker polynomials and q-series truncated at a fixed order.

These are the general-purpose containers. They favour clarity over speed;
the distribution computations in :mod:`hookdist.qseries` use specialised
kernels and only fall back on these types for identity checks and small
reference computations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Any, Callable, Iterable, Sequence

_RINGS = {int: "integer", Fraction: "rational", float: "real"}


def _ring_of(value: Any) -> str:
    if isinstance(value, MarkerPolynomial):
        return "poly/" + value.ring
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient ring")
    try:
        return _RINGS[type(value)]
    except KeyError:
        raise TypeError(f"unsupported coefficient type {type(value).__name__}") from None


def _is_zero(value: Any) -> bool:
    return value == 0


class MarkerPolynomial:
    """Polynomial in one marker variable with coefficients in a fixed ring.

    The ring is ``"integer"``, ``"rational"``, ``"real"`` or
    ``"poly/<ring>"`` for nested (multivariate) polynomials. Trailing zeros
    are never stored, so the zero polynomial has no coefficients and is
    compatible with every ring.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Any] = (), ring: str | None = None):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        if ring is None:
            ring = _ring_of(cs[-1]) if cs else "integer"
        self.coeffs: tuple = tuple(cs)
        self.ring = ring

    # construction helpers
    @classmethod
    def constant(cls, value: Any) -> "MarkerPolynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, value: Any = 1) -> "MarkerPolynomial":
        return cls([0] * degree + [value])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"MarkerPolynomial({list(self.coeffs)!r}, ring={self.ring!r})"

    def _coerce(self, other: Any) -> "MarkerPolynomial":
        if isinstance(other, MarkerPolynomial):
            if other.coeffs and self.coeffs and other.ring != self.ring:
                raise TypeError(f"mixed-ring arithmetic: {self.ring} with {other.ring}")
            return other
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return MarkerPolynomial([other], ring=self.ring)
        return NotImplemented

    def _ring_with(self, other: "MarkerPolynomial") -> str:
        return self.ring if self.coeffs else other.ring

    def __add__(self, other: Any) -> "MarkerPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MarkerPolynomial(
            (a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)),
            ring=self._ring_with(other),
        )

    __radd__ = __add__

    def __neg__(self) -> "MarkerPolynomial":
        return MarkerPolynomial((-a for a in self.coeffs), ring=self.ring)

    def __sub__(self, other: Any) -> "MarkerPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "MarkerPolynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "MarkerPolynomial":
        if not isinstance(other, MarkerPolynomial):
            if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
                out = [a * other for a in self.coeffs]
                # the scalar may widen the ring (integer * Fraction), so infer it
                return MarkerPolynomial(out, ring=None if any(out) else self.ring)
            return NotImplemented
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return MarkerPolynomial((), ring=self._ring_with(other))
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return MarkerPolynomial(out, ring=self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MarkerPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MarkerPolynomial([1], ring=self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MarkerPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, float)):
            return self.coeffs == ((other,) if other != 0 else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def map(self, f: Callable[[Any], Any], ring: str | None = None) -> "MarkerPolynomial":
        return MarkerPolynomial((f(c) for c in self.coeffs), ring=ring)

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, a: Any) -> "MarkerPolynomial":
        """Return ``p(X + a)`` as a polynomial in ``X``."""
        return MarkerPolynomial(taylor_shift(list(self.coeffs), a), ring=self.ring)


def taylor_shift(coeffs: Sequence[Any], a: Any) -> list:
    """Coefficients of ``p(X + a)`` given those of ``p``; O(d^2) additions.

    With ``a = -1`` this converts from the shifted marker ``U = T - 1`` back
    to ``T``; ``a = 1`` goes the other way.
    """
    out = list(coeffs)
    d = len(out)
    if a == 1:
        for i in range(d - 1):
            for k in range(d - 2, i - 1, -1):
                out[k] += out[k + 1]
    elif a == -1:
        for i in range(d - 1):
            for k in range(d - 2, i - 1, -1):
                out[k] -= out[k + 1]
    else:
        for i in range(d - 1):
            for k in range(d - 2, i - 1, -1):
                out[k] += a * out[k + 1]
    return out


class TruncatedSeries:
    """Power series in q with terms q^0 .. q^order retained.

    Coefficients may be numbers or :class:`MarkerPolynomial` values; every
    operation discards powers above ``order``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Any], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: list = cs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __getitem__(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    def _check(self, other: "TruncatedSeries") -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._check(other)
        return TruncatedSeries((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        n = self._check(other)
        out: list = [0] * (n + 1)
        b = other.coeffs
        for i in range(n + 1):
            a = self.coeffs[i]
            if _is_zero(a):
                continue
            for j in range(n + 1 - i):
                if not _is_zero(b[j]):
                    out[i + j] = out[i + j] + a * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def mul_binomial(self, shift: int, coeff: Any) -> "TruncatedSeries":
        """Multiply by ``1 + coeff * q^shift`` (shift >= 1)."""
        out = list(self.coeffs)
        for m in range(self.order, shift - 1, -1):
            if not _is_zero(self.coeffs[m - shift]):
                out[m] = out[m] + coeff * self.coeffs[m - shift]
        return TruncatedSeries(out, self.order)

    def div_binomial(self, shift: int, coeff: Any = 1) -> "TruncatedSeries":
        """Multiply by ``1 / (1 - coeff * q^shift)`` (shift >= 1)."""
        out = list(self.coeffs)
        for m in range(shift, self.order + 1):
            if not _is_zero(out[m - shift]):
                out[m] = out[m] + coeff * out[m - shift]
        return TruncatedSeries(out, self.order)

    def derivative_shift(self) -> list:
        """Coefficients of q * d/dq, i.e. k * a_k."""
        return [k * c for k, c in enumerate(self.coeffs)]

    def exp(self) -> "TruncatedSeries":
        """Formal exponential of a series with zero constant term.

        Uses ``k e_k = sum_{i=1}^k i s_i e_{k-i}``; coefficient rings must
        admit division by integers (rational or real).
        """
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs a zero constant term")
        ds = self.derivative_shift()
        e: list = [1] + [0] * self.order
        for k in range(1, self.order + 1):
            acc: Any = 0
            for i in range(1, k + 1):
                if not _is_zero(ds[i]) and not _is_zero(e[k - i]):
                    acc = acc + ds[i] * e[k - i]
            e[k] = acc * Fraction(1, k) if not isinstance(acc, float) else acc / k
        return TruncatedSeries(e, self.order)

    def log(self) -> "TruncatedSeries":
        """Formal logarithm of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        da = self.derivative_shift()
        ell: list = [0] * (self.order + 1)
        # k l_k = k a_k - sum_{i=1}^{k-1} i l_i a_{k-i}
        for k in range(1, self.order + 1):
            acc: Any = da[k]
            for i in range(1, k):
                if not _is_zero(ell[i]) and not _is_zero(self.coeffs[k - i]):
                    acc = acc - (i * ell[i]) * self.coeffs[k - i]
            ell[k] = acc * Fraction(1, k) if not isinstance(acc, float) else acc / k
        return TruncatedSeries(ell, self.order)
