import math

from hypothesis import given, strategies as st

from hookdist.numeric import LogReal, logsumexp


def test_overflowing_value():
    v = LogReal(1000.0)
    assert float(v) == math.inf
    m, e = v.mantissa_exponent()
    assert e == 434 and 1 <= m < 10
    assert v.ratio(LogReal(999.0)) == math.e


def test_zero_and_sign():
    assert float(LogReal.from_float(0.0)) == 0.0
    assert float(LogReal.from_float(-2.5)) == -2.5
    assert math.isclose(LogReal.from_int(10**400).log_abs, 400 * math.log(10), rel_tol=1e-15)


@given(st.lists(st.floats(-700, 700), min_size=1, max_size=20))
def test_logsumexp(values):
    top = max(values)
    expected = top + math.log(sum(math.exp(v - top) for v in values))
    assert math.isclose(logsumexp(values), expected, rel_tol=1e-12, abs_tol=1e-12)


def test_logsumexp_empty():
    assert logsumexp([]) == -math.inf
    assert logsumexp([-math.inf]) == -math.inf
