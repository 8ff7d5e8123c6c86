import math
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from hookdist.distribution import Flavor
from hookdist.errors import ResourceGuardError
from hookdist.partitions import (
    Partition,
    brute_force_distribution,
    conjugate,
    count_hooks_equal,
    count_hooks_multiple,
    enumerate_partitions,
    hook_lengths,
    syt_count,
)

# p(0..15), OEIS A000041
P_SMALL = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]


@lru_cache(maxsize=None)
def _syt_by_corners(parts: tuple[int, ...]) -> int:
    """SYT count by removing the cell holding the largest entry."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, p in enumerate(parts):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if p > nxt:
            smaller = list(parts)
            smaller[i] -= 1
            total += _syt_by_corners(tuple(x for x in smaller if x))
    return total


partitions_st = st.lists(st.integers(1, 9), max_size=8).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_partitions(n)) for n in range(16)] == P_SMALL


def test_enumeration_order_and_uniqueness():
    parts = [lam.parts for lam in enumerate_partitions(8)]
    assert parts[0] == (8,) and parts[-1] == (1,) * 8
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)


def test_empty_partition():
    assert list(enumerate_partitions(0)) == [Partition(())]
    assert hook_lengths(Partition(())) == ()


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_hook_lengths_of_541():
    # arm + leg + 1 cell by cell, rows (7,5,4,3,1), (5,3,2,1), (1)
    assert hook_lengths(Partition((5, 4, 1))) == (7, 5, 5, 4, 3, 3, 2, 1, 1, 1)


def test_syt_count_known():
    assert syt_count(Partition((5, 4, 1))) == 288
    assert syt_count(Partition((2, 1))) == 2
    assert syt_count(Partition(())) == 1


@given(partitions_st)
def test_syt_count_matches_corner_recursion(lam):
    assert syt_count(lam) == _syt_by_corners(lam.parts)


@given(partitions_st)
def test_conjugation_preserves_hooks(lam):
    assert conjugate(conjugate(lam)) == lam
    assert hook_lengths(conjugate(lam)) == hook_lengths(lam)
    assert len(hook_lengths(lam)) == lam.weight


@pytest.mark.parametrize("n", range(0, 9))
def test_sum_of_squared_syt_counts(n):
    assert sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n)) == math.factorial(n)


def test_count_hooks():
    lam = Partition((5, 4, 1))
    assert count_hooks_equal(lam, 5) == 2
    assert count_hooks_multiple(lam, 2) == 2
    assert count_hooks_multiple(lam, 1) == 10
    with pytest.raises(ValueError):
        count_hooks_equal(lam, 0)


def test_brute_force_n19_multiple():
    d = brute_force_distribution(19, 2, Flavor.MULTIPLE)
    assert d.counts == {2: 5, 8: 185, 9: 300}
    assert d.total == 490


def test_brute_force_guard():
    with pytest.raises(ResourceGuardError):
        brute_force_distribution(41, 2, "equal")
    assert brute_force_distribution(3, 1, "equal", guard=3).counts == {1: 2, 2: 1}
