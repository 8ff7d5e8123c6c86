"""Pure-Python/numpy versions of the series kernels.

Exact rows use Kronecker packing: a U-polynomial with coefficients below
``2**bits`` is stored as one Python int with at least ``bits + 1`` bits per
slot (rounded up to whole bytes), so multiplying a row by U is a shift and the per-factor update is one big-int
addition per row. This is valid because every coefficient of
``prod (1 + U x^j)^t`` is nonnegative, so slots never borrow.
"""

from __future__ import annotations

import numpy as np

RESCALE_AT = 1e250
_LOG_RESCALE = float(np.log(RESCALE_AT))


def shifted_rows(M: int, t: int, coeff_bits: int) -> list[list[int]]:
    """U-coefficients of ``prod_{j<=M} (1 + U x^j)^t`` for x^0 .. x^M."""
    slot = 8 * ((coeff_bits + 8) // 8)
    rows = [0] * (M + 1)
    rows[0] = 1
    for j in range(1, M + 1):
        for _ in range(t):
            for m in range(M, j - 1, -1):
                src = rows[m - j]
                if src:
                    rows[m] += src << slot
    return [_unpack(r, slot) for r in rows]


def _unpack(packed: int, slot: int) -> list[int]:
    if not packed:
        return []
    nbytes = slot // 8
    raw = packed.to_bytes((packed.bit_length() + 7) // 8 + nbytes, "little")
    out = [int.from_bytes(raw[i : i + nbytes], "little") for i in range(0, len(raw), nbytes)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _strided_tail_sums(f: np.ndarray, j: int) -> np.ndarray:
    """R[m] = sum_{r>=1} f[m - r*j] along axis 0 (zero where m < j)."""
    size = f.shape[0]
    shifted = np.zeros_like(f)
    shifted[j:] = f[:-j] if j < size else 0
    blocks = -(-size // j)
    pad = blocks * j - size
    if pad:
        shifted = np.concatenate([shifted, np.zeros((pad,) + f.shape[1:], dtype=f.dtype)])
    out = shifted.reshape((blocks, j) + f.shape[1:]).cumsum(axis=0)
    return out.reshape((blocks * j,) + f.shape[1:])[:size]


def positive_eval(M: int, t: int, T: float) -> tuple[np.ndarray, float]:
    """``prod_{j<=M} (1 + T x^j / (1 - x^j))^t`` at a numeric T > 0.

    Returns ``(coeffs, log_scale)`` with true coefficients
    ``coeffs * exp(log_scale)``. All terms are nonnegative so nothing cancels.
    """
    f = np.zeros(M + 1)
    f[0] = 1.0
    log_scale = 0.0
    for j in range(1, M + 1):
        for _ in range(t):
            f += T * _strided_tail_sums(f, j)
        top = f.max()
        if top > RESCALE_AT:
            f /= RESCALE_AT
            log_scale += _LOG_RESCALE
    return f, log_scale


def positive_poly(M: int, t: int, degree: int) -> np.ndarray:
    """Float T-coefficients of ``prod_{j<=M} (1 + T x^j / (1 - x^j))^t``.

    Row m holds the polynomial multiplying x^m; ``degree`` bounds its T-degree.
    """
    f = np.zeros((M + 1, degree + 1))
    f[0, 0] = 1.0
    for j in range(1, M + 1):
        for _ in range(t):
            tail = _strided_tail_sums(f, j)
            if tail[:, -1].any():
                raise ValueError(f"T-degree bound {degree} too small")
            f[:, 1:] += tail[:, :-1]
    return f


def colored_eval(M: int, t: int) -> tuple[np.ndarray, float]:
    """Float coefficients of ``prod_{j<=M} (1 - x^j)^(-t)`` with a log scale."""
    f = np.zeros(M + 1)
    f[0] = 1.0
    log_scale = 0.0
    for j in range(1, M + 1):
        for _ in range(t):
            f += _strided_tail_sums(f, j)
        top = f.max()
        if top > RESCALE_AT:
            f /= RESCALE_AT
            log_scale += _LOG_RESCALE
    return f, log_scale
