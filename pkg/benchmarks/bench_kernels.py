"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hookdist._kernels import _pure, max_marker_degree
from hookdist.qseries import _shifted_coeff_bits

try:
    from hookdist._kernels import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return np.allclose(a[0], b[0], rtol=1e-12) and a[1] == b[1]
    if isinstance(a, np.ndarray):
        return np.allclose(a, b, rtol=1e-12)
    return a == b


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return

    M = 500 if args.quick else 2500
    cases = [
        ("shifted_rows", (M, 2, _shifted_coeff_bits(M, 2))),
        ("positive_eval", (2 * M, 1, 0.5)),
        ("positive_poly", (M // 2, 2, max_marker_degree(M // 2, 2))),
        ("colored_eval", (2 * M, 11)),
    ]
    print(f"{'kernel':<15} {'args':<24} {'cython s':>10} {'python s':>10} {'speedup':>8}  agree")
    for name, kargs in cases:
        repeat = 1 if name in ("shifted_rows", "positive_poly") else 3
        tc, oc = _time(getattr(_ckernels, name), *kargs, repeat=repeat)
        tp, op = _time(getattr(_pure, name), *kargs, repeat=repeat)
        print(f"{name:<15} {str(kargs):<24} {tc:>10.3f} {tp:>10.3f} {tp / tc:>8.1f}  {_same(oc, op)}")


if __name__ == "__main__":
    main()
