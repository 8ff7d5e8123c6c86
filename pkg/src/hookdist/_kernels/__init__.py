"""Hot loops of the series engine, compiled when possible.

The Cython extension is used when it imports; otherwise the pure-Python
versions are used. Setting ``HOOKDIST_PURE_PYTHON=1`` forces the fallback.
Both backends expose the same functions and return identical exact results.
"""

from __future__ import annotations

import os

from . import _pure

try:
    if os.environ.get("HOOKDIST_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as _active
except ImportError:
    _active = _pure

BACKEND = "cython" if _active is not _pure else "python"


def max_marker_degree(M: int, t: int) -> int:
    """Largest marker degree at x^M in a product of ``(1 + marker * x^j)^t`` factors.

    Each ``j`` can contribute at most ``t`` factors of weight ``j``.
    """
    degree = used = 0
    j = 1
    while True:
        for _ in range(t):
            if used + j > M:
                return degree
            used += j
            degree += 1
        j += 1


shifted_rows = _active.shifted_rows
positive_eval = _active.positive_eval
positive_poly = _active.positive_poly
colored_eval = _active.colored_eval

__all__ = ["BACKEND", "max_marker_degree", "shifted_rows", "positive_eval", "positive_poly", "colored_eval"]
