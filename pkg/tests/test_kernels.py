import os
import subprocess
import sys

import numpy as np
import pytest

from hookdist import _kernels
from hookdist._kernels import _pure, max_marker_degree
from hookdist.qseries import _shifted_coeff_bits

ckernels = pytest.importorskip("hookdist._kernels._ckernels")


def _brute_max_degree(M, t):
    # greedy is optimal: smallest weights first
    weights = sorted(j for j in range(1, M + 1) for _ in range(t))
    used = d = 0
    for w in weights:
        if used + w > M:
            break
        used += w
        d += 1
    return d


@pytest.mark.parametrize("M,t", [(0, 1), (1, 1), (10, 3), (99, 2), (2500, 2)])
def test_max_marker_degree(M, t):
    assert max_marker_degree(M, t) == _brute_max_degree(M, t)
    assert max_marker_degree(2500, 2) == 99


@pytest.mark.parametrize("M,t", [(0, 1), (1, 3), (40, 1), (60, 2), (30, 5)])
def test_shifted_rows_agree(M, t):
    bits = _shifted_coeff_bits(M, t)
    assert ckernels.shifted_rows(M, t, bits) == _pure.shifted_rows(M, t, bits)


def test_shifted_rows_small_case():
    # (1 + U x)^2 (1 + U x^2)^2 up to x^2: rows 1, 2U, U^2 + 2U
    assert _pure.shifted_rows(2, 2, 8) == [[1], [0, 2], [0, 2, 1]]


@pytest.mark.parametrize("T", [0.1, 1.0, 3.0])
def test_positive_eval_agree(T):
    fc, sc = ckernels.positive_eval(300, 2, T)
    fp, sp_ = _pure.positive_eval(300, 2, T)
    assert sc == sp_
    np.testing.assert_allclose(fc, fp, rtol=1e-12)


def test_positive_eval_rescales():
    f, scale = ckernels.positive_eval(5000, 1, 1e6)
    assert scale > 0 and np.isfinite(f).all()


def test_positive_poly_agree_and_bound():
    d = max_marker_degree(120, 3)
    np.testing.assert_allclose(ckernels.positive_poly(120, 3, d), _pure.positive_poly(120, 3, d), rtol=1e-12)
    with pytest.raises(ValueError):
        ckernels.positive_poly(120, 3, d - 1)
    with pytest.raises(ValueError):
        _pure.positive_poly(120, 3, d - 1)


def test_colored_eval_agree():
    fc, sc = ckernels.colored_eval(2000, 11)
    fp, sp_ = _pure.colored_eval(2000, 11)
    assert sc == sp_
    np.testing.assert_allclose(fc, fp, rtol=1e-12)


def test_backend_selection():
    assert _kernels.BACKEND == "cython"
    env = dict(os.environ, HOOKDIST_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "import hookdist; from hookdist.qseries import tmult_distribution as f;"
         "print(hookdist.BACKEND, f(19, 2).counts)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python {2: 5, 8: 185, 9: 300}"
