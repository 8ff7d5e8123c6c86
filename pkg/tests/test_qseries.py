import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hookdist.errors import ResourceGuardError
from hookdist.partitions import brute_force_distribution, enumerate_partitions, hook_lengths
from hookdist.qseries import (
    colored_partitions,
    convolve,
    core_counts,
    eta_power,
    evaluate_P,
    hook_distribution,
    partition_numbers,
    thook_distribution,
    tmult_distribution,
)


def _naive_product(M, factors):
    """Multiply sparse power series truncated at x^M."""
    out = [1] + [0] * M
    for f in factors:
        new = [0] * (M + 1)
        for i, a in enumerate(out):
            if a:
                for j, b in f.items():
                    if i + j <= M:
                        new[i + j] += a * b
        out = new
    return out


def test_partition_numbers_against_sympy():
    p = partition_numbers(5000)
    for n in (0, 1, 10, 100, 1000, 2345, 5000):
        assert p[n] == int(sympy.partition(n))
    with pytest.raises(ValueError):
        partition_numbers(-1)


@pytest.mark.parametrize("t", [1, 2, 5])
def test_eta_power(t):
    M = 40
    factors = [{0: 1, j: -1} for j in range(1, M + 1) for _ in range(t)]
    assert eta_power(M, t) == _naive_product(M, factors)


@pytest.mark.parametrize("t", [1, 3])
def test_colored_partitions(t):
    M = 40
    factors = [{j * k: 1 for k in range(M // j + 1)} for j in range(1, M + 1) for _ in range(t)]
    assert colored_partitions(M, t) == _naive_product(M, factors)


@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=12),
       st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=12))
def test_convolve_matches_naive(a, b):
    assert convolve(a, b) == [int(x) for x in np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))]


@pytest.mark.parametrize("t", [2, 3, 4])
def test_core_counts_against_enumeration(t):
    n = 20
    cores = core_counts(n, t)
    for m, c in enumerate(cores):
        size = n - t * m
        expected = sum(1 for lam in enumerate_partitions(size) if all(h % t for h in hook_lengths(lam)))
        assert c == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 22), st.integers(1, 6), st.sampled_from(["equal", "multiple"]))
def test_engine_matches_brute_force(n, t, flavor):
    assert hook_distribution(n, t, flavor) == brute_force_distribution(n, t, flavor)


def test_small_cases():
    assert thook_distribution(0, 5).counts == {0: 1}
    assert tmult_distribution(0, 5).counts == {0: 1}
    assert thook_distribution(3, 1).counts == {1: 2, 2: 1}
    assert tmult_distribution(19, 2).counts == {2: 5, 8: 185, 9: 300}
    # every hook length is a multiple of 1
    assert tmult_distribution(30, 1).counts == {30: partition_numbers(30)[30]}


@pytest.mark.parametrize("n,t", [(300, 2), (500, 5), (200, 1)])
def test_float_ring_matches_exact(n, t):
    for flavor in ("equal", "multiple"):
        exact = hook_distribution(n, t, flavor)
        approx = hook_distribution(n, t, flavor, ring="float")
        for m, c in exact.counts.items():
            assert math.isclose(approx.counts[m], c, rel_tol=1e-10)


def test_float_ring_overflow_is_reported(monkeypatch):
    from hookdist import qseries

    monkeypatch.setattr(qseries._kernels, "positive_poly", lambda M, t, d: np.full((M + 1, d + 1), np.inf))
    with pytest.raises(OverflowError):
        thook_distribution(100, 2, ring="float")


def test_resource_guard():
    with pytest.raises(ResourceGuardError):
        thook_distribution(20000, 1)
    assert thook_distribution(50, 1, work_ceiling=50 * 50).total == partition_numbers(50)[50]
    with pytest.raises(ResourceGuardError):
        tmult_distribution(100, 1, work_ceiling=10)


def test_argument_checks():
    with pytest.raises(ValueError):
        thook_distribution(-1, 2)
    with pytest.raises(ValueError):
        tmult_distribution(5, 0)
    with pytest.raises(ValueError):
        thook_distribution(5, 2, ring="decimal")
    with pytest.raises(ValueError):
        evaluate_P(5, 2, "equal", 0.0)


@pytest.mark.parametrize("flavor", ["equal", "multiple"])
@pytest.mark.parametrize("T", [0.25, 0.5, 1.0, 2.0, 4.0])
def test_evaluate_P_matches_polynomial(flavor, T):
    d = hook_distribution(150, 3, flavor)
    exact = sum(Fraction(c) * Fraction(T) ** m for m, c in d.counts.items())
    assert math.isclose(math.exp(evaluate_P(150, 3, flavor, T).log_abs - math.log(exact)), 1.0, rel_tol=1e-12)


def test_evaluate_P_at_one_is_p_n():
    assert math.isclose(evaluate_P(2000, 2, "equal", 1.0).log_abs, math.log(partition_numbers(2000)[2000]),
                        rel_tol=1e-14)


def test_multiples_of_one_scale_by_T():
    # every hook counts when t = 1, so P(n; T) = T^n p(n)
    lhs = evaluate_P(400, 1, "multiple", 1.01).log_abs
    assert math.isclose(lhs, 400 * math.log(1.01) + math.log(partition_numbers(400)[400]), rel_tol=1e-13)
