"""Coefficient extraction from the hook-counting generating functions.

For a fixed modulus t, write x = q^t and M = n // t.

``equal`` flavor (hooks of length exactly t)::

    sum_lam q^|lam| T^{#t-hooks} = prod_j (1 + (T-1) q^{tj})^t / (1 - q^j)

The exact path builds ``A(U, x) = prod_{j<=M} (1 + U x^j)^t`` in the shifted
marker ``U = T - 1`` (nonnegative coefficients, U-degree O(sqrt(M))), pairs
each x^m coefficient with p(n - t m), and shifts back to the T basis once.

``multiple`` flavor (hooks divisible by t)::

    sum_lam q^|lam| T^{#H_t} = prod_j (1 - q^{tj})^t / ((1 - (T q^t)^j)^t (1 - q^j))

splits as ``C_t(q) * P(T x)^t`` with ``C_t = prod (1 - q^{tj})^t / (1 - q^j)``
the t-core series and ``P`` the partition series, so the count for m hooks
is ``[x^m] P(x)^t`` times the number of t-cores of size n - t m.

Float evaluation at a numeric T uses the same core series and the
positive-coefficient rewriting ``(1 + (T-1) y) / (1 - y) = 1 + T y / (1 - y)``,
so no cancellation occurs for T < 1.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .distribution import Flavor, HookDistribution
from .errors import ResourceGuardError
from .numeric import LogReal, logsumexp
from .series import taylor_shift

#: Ceiling on ``n * (n // t)`` for exact-ring distributions.
EXACT_WORK_CEILING = 10**8

_BOUND_MARGIN_BITS = 8


def _generalized_pentagonals(N: int) -> list[tuple[int, int]]:
    """Generalized pentagonal numbers g <= N with the recurrence sign (-1)^(k+1).

    ``p(m) = sum sign * p(m - g)``; the coefficient of x^g in
    ``prod (1 - x^j)`` is ``-sign``.
    """
    out = []
    k = 1
    while True:
        sign = 1 if k % 2 else -1
        g1 = k * (3 * k - 1) // 2
        if g1 > N:
            break
        out.append((g1, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= N:
            out.append((g2, sign))
        k += 1
    return out


@lru_cache(maxsize=8)
def _partition_numbers(N: int) -> tuple[int, ...]:
    pents = _generalized_pentagonals(N)
    p = [1] + [0] * N
    for m in range(1, N + 1):
        acc = 0
        for g, sign in pents:
            if g > m:
                break
            acc += p[m - g] if sign > 0 else -p[m - g]
        p[m] = acc
    return tuple(p)


def partition_numbers(N: int) -> list[int]:
    """p(0), ..., p(N) by Euler's pentagonal recurrence."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return list(_partition_numbers(N))


def eta_power(M: int, t: int) -> list[int]:
    """Coefficients of ``prod_j (1 - x^j)^t`` up to x^M."""
    sparse = [(0, 1)] + [(g, -sign) for g, sign in _generalized_pentagonals(M)]
    out = [1] + [0] * M
    for _ in range(t):
        new = [0] * (M + 1)
        for m, a in enumerate(out):
            if a:
                for g, sign in sparse:
                    if m + g > M:
                        break
                    new[m + g] += a if sign > 0 else -a
        out = new
    return out


def colored_partitions(M: int, t: int) -> list[int]:
    """Coefficients of ``prod_j (1 - x^j)^(-t)`` up to x^M (t-colored partitions)."""
    pents = _generalized_pentagonals(M)
    out = [1] + [0] * M
    for _ in range(t):
        # divide by prod (1 - x^j): out[m] += sum sign * out[m - g]
        for m in range(1, M + 1):
            acc = out[m]
            for g, sign in pents:
                if g > m:
                    break
                acc += out[m - g] if sign > 0 else -out[m - g]
            out[m] = acc
    return out


def _pack(values: Sequence[int], slot: int) -> int:
    nbytes = slot // 8
    return int.from_bytes(b"".join(v.to_bytes(nbytes, "little") for v in values), "little")


def _unpack(packed: int, slot: int, count: int) -> list[int]:
    nbytes = slot // 8
    raw = packed.to_bytes(count * nbytes, "little")
    return [int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") for i in range(count)]


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact integer convolution via Kronecker substitution.

    Signed inputs are split into nonnegative parts so each packed product has
    no borrows; CPython's big-int multiplication does the work.
    """
    if not a or not b:
        return []
    a_pos = [max(v, 0) for v in a]
    a_neg = [max(-v, 0) for v in a]
    b_pos = [max(v, 0) for v in b]
    b_neg = [max(-v, 0) for v in b]
    bits = max(abs(v) for v in a).bit_length() + max(abs(v) for v in b).bit_length()
    slot = 8 * ((bits + min(len(a), len(b)).bit_length() + 8) // 8)
    count = len(a) + len(b) - 1
    out = [0] * count
    for sign, x, y in ((1, a_pos, b_pos), (1, a_neg, b_neg), (-1, a_pos, b_neg), (-1, a_neg, b_pos)):
        if not any(x) or not any(y):
            continue
        prod = _unpack(_pack(x, slot) * _pack(y, slot), slot, count)
        for i, v in enumerate(prod):
            if v:
                out[i] += sign * v
    return out


def core_counts(n: int, t: int) -> list[int]:
    """Number of t-cores of size ``n - t*m`` for m = 0 .. n // t."""
    M = n // t
    p = _partition_numbers(n)
    e = eta_power(M, t)
    # core(n - t m) = sum_i e_i p(n - t(m + i)); correlate e with p along the progression
    rev = [p[n - t * (M - r)] for r in range(M + 1)]
    full = convolve(e, rev)
    return [full[M - m] for m in range(M + 1)]


def _shifted_coeff_bits(M: int, t: int) -> int:
    """Upper bound on the bit length of any U-coefficient of prod_{j<=M} (1 + U x^j)^t.

    All coefficients are nonnegative and the U=1 value of row m is at most
    ``prod_j (1 + r^j)^t / r^m`` for every 0 < r < 1.
    """
    if M == 0:
        return 1
    s = np.geomspace(1e-4, 2.0, 400) / math.sqrt(M)
    j = np.arange(1, M + 1)
    best = math.inf
    for si in s:
        val = t * np.log1p(np.exp(-si * j)).sum() + M * si
        best = min(best, val)
    return int(best / math.log(2)) + _BOUND_MARGIN_BITS


def _check_args(n: int, t: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")


def _check_ring(ring: str) -> str:
    if ring not in ("exact", "float"):
        raise ValueError(f"ring must be 'exact' or 'float', got {ring!r}")
    return ring


def exact_work(n: int, t: int) -> int:
    return n * (n // t)


def _guard(n: int, t: int, ceiling: int | None) -> None:
    ceiling = EXACT_WORK_CEILING if ceiling is None else ceiling
    if exact_work(n, t) > ceiling:
        raise ResourceGuardError(
            f"exact ring refused: work estimate n*(n/t) = {exact_work(n, t)} exceeds {ceiling}; "
            "use ring='float' or raise the ceiling"
        )


def shifted_marker_rows(M: int, t: int) -> list[list[int]]:
    """U-basis coefficients of ``prod_{j<=M} (1 + U x^j)^t`` modulo x^(M+1)."""
    return _kernels.shifted_rows(M, t, _shifted_coeff_bits(M, t))


def thook_distribution(
    n: int, t: int, ring: str = "exact", work_ceiling: int | None = None
) -> HookDistribution:
    """Counts of partitions of ``n`` by their number of hooks of length exactly ``t``."""
    _check_args(n, t)
    ring = _check_ring(ring)
    M = n // t
    p = _partition_numbers(n)
    if ring == "float":
        degree = _kernels.max_marker_degree(M, t)
        poly = _kernels.positive_poly(M, t, degree)
        cores = np.array([float(c) for c in core_counts(n, t)])
        with np.errstate(over="ignore", invalid="ignore"):
            counts = cores @ poly
        if not np.all(np.isfinite(counts)):
            raise OverflowError(f"float ring overflows at n={n}")
        return HookDistribution(
            n, t, Flavor.EQUAL, {k: float(c) for k, c in enumerate(counts)}, float(p[n])
        )
    _guard(n, t, work_ceiling)
    rows = shifted_marker_rows(M, t)
    width = max(len(r) for r in rows)
    u_basis = [0] * width
    for m, row in enumerate(rows):
        weight = p[n - t * m]
        for k, a in enumerate(row):
            u_basis[k] += a * weight
    t_basis = taylor_shift(u_basis, -1)
    counts = {k: c for k, c in enumerate(t_basis) if c}
    if any(c < 0 for c in counts.values()) or sum(counts.values()) != p[n]:
        raise ArithmeticError(f"inconsistent t-hook counts for n={n}, t={t}")
    return HookDistribution(n, t, Flavor.EQUAL, counts, p[n])


def tmult_distribution(
    n: int, t: int, ring: str = "exact", work_ceiling: int | None = None
) -> HookDistribution:
    """Counts of partitions of ``n`` by their number of hook lengths divisible by ``t``."""
    _check_args(n, t)
    ring = _check_ring(ring)
    M = n // t
    p = _partition_numbers(n)
    cores = core_counts(n, t)
    if ring == "float":
        colored, log_scale = _kernels.colored_eval(M, t)
        counts = {}
        for m in range(M + 1):
            if cores[m] and colored[m] > 0:
                counts[m] = math.exp(math.log(colored[m]) + log_scale + math.log(cores[m]))
        return HookDistribution(n, t, Flavor.MULTIPLE, counts, float(p[n]))
    _guard(n, t, work_ceiling)
    colored = colored_partitions(M, t)
    counts = {m: colored[m] * cores[m] for m in range(M + 1) if cores[m]}
    if any(c < 0 for c in counts.values()) or sum(counts.values()) != p[n]:
        raise ArithmeticError(f"inconsistent t-multiple counts for n={n}, t={t}")
    return HookDistribution(n, t, Flavor.MULTIPLE, counts, p[n])


def hook_distribution(
    n: int, t: int, flavor: Flavor | str, ring: str = "exact", work_ceiling: int | None = None
) -> HookDistribution:
    if Flavor.parse(flavor) is Flavor.EQUAL:
        return thook_distribution(n, t, ring, work_ceiling)
    return tmult_distribution(n, t, ring, work_ceiling)


def evaluate_P(n: int, t: int, flavor: Flavor | str, T: float) -> LogReal:
    """Value of the generating polynomial at a positive real ``T``, log-scaled.

    The marker is specialised to ``T`` before any series product, so the cost
    is that of a scalar series computation rather than a polynomial one.
    """
    _check_args(n, t)
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    M = n // t
    cores = core_counts(n, t)
    log_cores = [math.log(c) if c > 0 else -math.inf for c in cores]
    if Flavor.parse(flavor) is Flavor.EQUAL:
        f, log_scale = _kernels.positive_eval(M, t, T)
        logs = [lc + math.log(fm) + log_scale for lc, fm in zip(log_cores, f) if fm > 0 and lc > -math.inf]
    else:
        colored, log_scale = _kernels.colored_eval(M, t)
        log_T = math.log(T)
        logs = [
            lc + math.log(c) + log_scale + m * log_T
            for m, (lc, c) in enumerate(zip(log_cores, colored))
            if c > 0 and lc > -math.inf
        ]
    return LogReal(logsumexp(logs), 1)
