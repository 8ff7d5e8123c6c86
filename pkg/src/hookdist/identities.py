"""Exact checks of the hook-length product identities as truncated q-series.

Both sides are expanded independently: the sum side by enumerating
partitions and multiplying per-hook factors, the product side through
formal log/exp of the infinite product. Coefficients are exact rational
polynomials in the marker variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .partitions import enumerate_partitions, hook_lengths
from .qseries import _generalized_pentagonals
from .series import MarkerPolynomial, TruncatedSeries


@dataclass
class IdentityReport:
    name: str
    order: int
    equal: bool
    first_mismatch: int | None
    lhs: list = field(repr=False)
    rhs: list = field(repr=False)

    def __bool__(self) -> bool:
        return self.equal

    def summary(self) -> str:
        if self.equal:
            return f"{self.name}: equal through q^{self.order}"
        return (
            f"{self.name}: mismatch at q^{self.first_mismatch}: "
            f"lhs={self.lhs[self.first_mismatch]!r} rhs={self.rhs[self.first_mismatch]!r}"
        )


def _report(name: str, lhs: list, rhs: list, order: int) -> IdentityReport:
    mismatch = next((k for k in range(order + 1) if lhs[k] != rhs[k]), None)
    return IdentityReport(name, order, mismatch is None, mismatch, lhs, rhs)


def _poly(coeffs: list) -> MarkerPolynomial:
    return MarkerPolynomial([Fraction(c) for c in coeffs], ring="rational")


def _sigma(k: int) -> int:
    return sum(d for d in range(1, k + 1) if k % d == 0)


def _log_euler_product(order: int, step: int = 1) -> TruncatedSeries:
    """``sum_j log(1 - q^(step*j))`` as rational coefficients."""
    coeffs: list = [Fraction(0)] * (order + 1)
    for k in range(1, order // step + 1):
        coeffs[k * step] = Fraction(-_sigma(k), k)
    return TruncatedSeries(coeffs, order)


def nekrasov_okounkov_check(order: int, z: Fraction | int | None = None) -> IdentityReport:
    """Compare ``sum_lam q^|lam| prod_h (1 - z/h^2)`` with ``prod (1 - q^n)^(z-1)``.

    With ``z=None`` coefficients are full polynomials in z; a number
    specialises z on both sides.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    zpoly = _poly([0, 1]) if z is None else _poly([z])

    lhs: list = []
    for N in range(order + 1):
        acc = MarkerPolynomial((), ring="rational")
        for lam in enumerate_partitions(N):
            term = _poly([1])
            for h in hook_lengths(lam):
                term = term * (_poly([1]) - zpoly * Fraction(1, h * h))
            acc = acc + term
        lhs.append(acc)

    log_prod = _log_euler_product(order)
    exponent = TruncatedSeries([c * (zpoly - 1) for c in log_prod.coeffs], order)
    exponent.coeffs[0] = 0
    rhs_series = exponent.exp()
    rhs = [_as_poly(c) for c in rhs_series.coeffs]
    return _report("Nekrasov-Okounkov", lhs, rhs, order)


def _as_poly(value: Any) -> MarkerPolynomial:
    if isinstance(value, MarkerPolynomial):
        return value
    return _poly([value])


def _nested(z_coeffs: list[MarkerPolynomial]) -> MarkerPolynomial:
    """A polynomial in z whose coefficients are rational polynomials in y."""
    return MarkerPolynomial(z_coeffs, ring="poly/rational")


def _y_monomial(k: int, c: Fraction | int = 1) -> MarkerPolynomial:
    return _poly([0] * k + [c])


def han_check(
    order: int,
    t: int,
    y: Fraction | int | None = None,
    z: Fraction | int | None = None,
) -> IdentityReport:
    """Compare Han's two-parameter hook identity for multiples of ``t``.

    Sum side: ``sum_lam q^|lam| prod_{h in H_t(lam)} (y - t*y*z/h^2)``.
    Product side: ``prod (1 - q^(tn))^t / ((1 - (y q^t)^n)^(t - z) (1 - q^n))``.

    Coefficients are polynomials in z over rational polynomials in y.
    Passing numbers for ``y``/``z`` specialises them on both sides.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if t < 1:
        raise ValueError("t must be positive")

    def y_pow(k: int) -> MarkerPolynomial:
        return _y_monomial(k) if y is None else _poly([Fraction(y) ** k])

    # z as a nested polynomial; t - z likewise
    z_var = _nested([_poly([]), _poly([1])]) if z is None else _nested([_poly([z])])
    one = _nested([_poly([1])])
    t_minus_z = one * t - z_var

    lhs: list = []
    for N in range(order + 1):
        acc = _nested([])
        for lam in enumerate_partitions(N):
            hooks = [h for h in hook_lengths(lam) if h % t == 0]
            term = _nested([y_pow(len(hooks))])
            for h in hooks:
                term = term * (one - z_var * Fraction(t, h * h))
            acc = acc + term
        lhs.append(acc)

    # log of the product side, coefficient by coefficient
    log_coeffs: list = [_nested([]) for _ in range(order + 1)]
    log_t = _log_euler_product(order, step=t)
    log_1 = _log_euler_product(order)
    for k in range(1, order + 1):
        log_coeffs[k] = log_coeffs[k] + one * (t * log_t.coeffs[k] - log_1.coeffs[k])
    # -(t - z) * sum_n log(1 - y^n q^(tn)) = (t - z) * sum_{n,r} y^(nr) q^(tnr) / r
    for n in range(1, order // t + 1):
        for r in range(1, order // (t * n) + 1):
            k = t * n * r
            log_coeffs[k] = log_coeffs[k] + t_minus_z * _nested([y_pow(n * r) * Fraction(1, r)])
    rhs = TruncatedSeries(log_coeffs, order).exp().coeffs
    rhs = [c if isinstance(c, MarkerPolynomial) else _nested([_poly([c])]) for c in rhs]
    return _report(f"Han (t={t})", lhs, rhs, order)


def pentagonal_check(order: int) -> IdentityReport:
    """Euler's pentagonal theorem, a sanity check of the log/exp machinery."""
    sparse = {0: 1}
    for g, sign in _generalized_pentagonals(order):
        sparse[g] = -sign
    lhs = [_poly([sparse.get(k, 0)]) for k in range(order + 1)]
    rhs = [_as_poly(c) for c in _log_euler_product(order).exp().coeffs]
    return _report("Euler pentagonal", lhs, rhs, order)
