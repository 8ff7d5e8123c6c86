import math

import numpy as np
import pytest
import sympy

from hookdist.asymptotics import (
    _saddle_lhs_G,
    aux_sums,
    em_sums,
    hardy_ramanujan,
    prop1_main_term,
    prop2_main_term,
    solve_saddle_G,
    solve_saddle_Ghat,
    theorem1_params,
    theorem2_limit_mgf,
    theorem2_params,
)
from hookdist.qseries import evaluate_P, hook_distribution, partition_numbers
from hookdist.statistics import exact_moments


def test_em_a0_error_scales_like_alpha():
    C = em_sums(0.1, 1, 1.0).error("a0") / 0.1
    assert em_sums(0.05, 1, 1.0).error("a0") <= 1.3 * C * 0.05


def test_em_b_vanishes_at_T1():
    s = em_sums(0.05, 3, 1.0)
    assert s.sums["b"] == 0.0 and s.main["b"] == 0.0


def test_em_c_at_T2():
    s = em_sums(0.05, 1, 2.0)
    assert s.main["c"] == pytest.approx(2 / 0.05**3 * math.pi**2 / 12, rel=1e-14)
    assert s.sums["c"] == pytest.approx(s.main["c"], rel=1e-10)


def test_em_c_continuous_at_T1():
    assert em_sums(0.1, 2, 1.0).main["c"] == pytest.approx(em_sums(0.1, 2, 1.0 + 1e-7).main["c"], rel=1e-6)


def test_em_domain():
    with pytest.raises(ValueError):
        em_sums(1.0, 1, 1.0)
    with pytest.raises(ValueError):
        em_sums(0.5, 1, 0.0)
    with pytest.raises(ValueError):
        aux_sums(0.0)


def test_aux_sums():
    errs = [abs(s.first - s.first_main) for s in map(aux_sums, (0.1, 0.05, 0.025))]
    assert max(errs) < 0.05
    for a in (0.1, 0.05):
        s = aux_sums(a)
        assert abs(s.second - s.second_main) <= a
    s = aux_sums(0.001)
    assert s.first / (math.pi**2 / (6 * 0.001**2)) == pytest.approx(1, abs=1e-3)


@pytest.mark.parametrize("t,T", [(1, 0.5), (2, 1.0), (5, 2.0), (3, 0.1)])
def test_saddle_lhs_decreasing(t, T):
    lhs = _saddle_lhs_G(t, T)
    values = [lhs(a) for a in np.geomspace(1e-3, 0.99, 40)]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_saddle_T1_reduces_to_partition_sum():
    sol = solve_saddle_G(500, 4, 1.0)
    assert aux_sums(sol.alpha).first == pytest.approx(500, rel=1e-10)
    assert abs(sol.residual) <= 1e-9 * 500


def test_saddle_expansion_order():
    C = solve_saddle_G(1000, 2, 1.0).scaled_gap
    assert solve_saddle_G(10000, 2, 1.0).scaled_gap <= 1.5 * C


def test_saddle_monotone_in_n():
    alphas = [solve_saddle_G(n, 2, 0.7).alpha for n in (50, 100, 400, 2000)]
    assert all(a > b for a, b in zip(alphas, alphas[1:]))


def test_ghat_saddle_reduces_at_alpha0():
    assert solve_saddle_Ghat(800, 11, 0.0).alpha == pytest.approx(solve_saddle_G(800, 11, 1.0).alpha, rel=1e-12)


def test_ghat_saddle_expansion():
    gaps = [abs(s.alpha - s.expansion_value) * math.sqrt(s.n)
            for s in (solve_saddle_Ghat(n, 11, 1.0) for n in (1000, 4000, 16000))]
    assert gaps[0] > gaps[1] > gaps[2]
    betas = [solve_saddle_Ghat(n, 3, -1.0).alpha for n in (200, 800, 3200)]
    assert betas[0] > betas[1] > betas[2]


def test_ghat_domain():
    with pytest.raises(ValueError):
        solve_saddle_Ghat(100, 1, -20.0)
    with pytest.raises(ValueError):
        prop2_main_term(100, 1, -20.0)


def test_prop1_at_T1_is_hardy_ramanujan_shape():
    for n in (10, 1000):
        expected = math.pi * math.sqrt(2 * n / 3) - math.pi / (math.sqrt(6) * math.sqrt(n)) - math.log(4 * math.sqrt(3) * n)
        assert prop1_main_term(n, 1, 1.0).log_abs == pytest.approx(expected, rel=1e-14)
        assert prop1_main_term(n, 7, 1.0) == prop1_main_term(n, 1, 1.0)


def test_prop1_ratio_to_p_n_improves():
    p = partition_numbers(10000)
    gaps = [abs(math.log(p[n]) - prop1_main_term(n, 2, 1.0).log_abs) for n in (1000, 4000, 10000)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_prop1_at_T2():
    ratio = evaluate_P(5000, 2, "equal", 2.0).ratio(prop1_main_term(5000, 2, 2.0))
    assert abs(ratio - 1) < 5000 ** (-1 / 7)


def test_prop2_reduction_and_monotonicity():
    assert prop2_main_term(1000, 11, 0.0).ratio(hardy_ramanujan(1000)) == pytest.approx(1, rel=1e-13)
    values = [prop2_main_term(1000, 11, a).log_abs for a in np.linspace(-3, 3, 13)]
    assert all(x < y for x, y in zip(values, values[1:]))


def test_prop2_against_dp():
    Tn = math.exp(1 / math.sqrt(1000))
    ratio = evaluate_P(1000, 11, "multiple", Tn).ratio(prop2_main_term(1000, 11, 1.0))
    assert abs(ratio - 1) < 0.5


def test_theorem1_params():
    p = theorem1_params(5000, 2)
    assert p.mean == pytest.approx(54.13, abs=5e-3)
    assert p.mean == pytest.approx(math.sqrt(30000) / math.pi - 1, rel=1e-15)
    assert all(theorem1_params(n, t).variance > 0 for n in (1, 10, 10**6) for t in (1, 5))
    assert p.k_of(1.0) == pytest.approx(p.mean + math.sqrt(p.variance))
    exact = float(exact_moments(hook_distribution(4000, 2, "equal")).mean)
    assert abs(exact / theorem1_params(4000, 2).mean - 1) < 0.05


def test_theorem2_params_t11():
    n = 1000
    p = theorem2_params(n, 11)
    assert (p.shape, p.scale) == (5.0, pytest.approx(1 / math.sqrt(5)))
    assert p.mean == pytest.approx(n / 11 - 5 * math.sqrt(6 * n) / (11 * math.pi))
    assert p.variance == pytest.approx(30 * n / (121 * math.pi**2))
    with pytest.raises(ValueError, match="t >= 4"):
        theorem2_params(n, 3)
    with pytest.raises(ValueError):
        theorem2_params(n, 11, orientation="sideways")


def test_theorem2_mode_minus_mean_symbolic():
    n, t = sympy.symbols("n t", positive=True)
    mean = n / t - (t - 1) * sympy.sqrt(6 * n) / (2 * sympy.pi * t)
    mode = n / t - (t - 3) * sympy.sqrt(6 * n) / (2 * sympy.pi * t)
    assert sympy.simplify(mode - mean - sympy.sqrt(6 * n) / (sympy.pi * t)) == 0
    p = theorem2_params(2000, 7)
    assert p.mode - p.mean == pytest.approx(math.sqrt(6 * 2000) / (math.pi * 7))


def test_theorem2_orientations_mirror():
    right = theorem2_params(1000, 11, "right").limit
    left = theorem2_params(1000, 11, "left").limit
    for x in (-1.0, 0.3, 1.7):
        assert right.cdf(x) == pytest.approx(1 - left.cdf(-x), abs=1e-13)


def test_theorem2_limit_mgf():
    assert theorem2_limit_mgf(11, 0.0) == 1.0
    with pytest.raises(ValueError):
        theorem2_limit_mgf(11, -5.0)
