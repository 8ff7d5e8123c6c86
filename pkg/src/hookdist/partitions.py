"""Integer partitions, hook lengths and brute-force distribution oracles.

Everything here works directly from Young diagrams, so it is slow but
independent of the generating-function machinery in :mod:`hookdist.qseries`.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .distribution import Flavor, HookDistribution
from .errors import HookComputationError, ResourceGuardError

#: Largest ``n`` the brute-force oracle enumerates unless told otherwise.
BRUTE_FORCE_GUARD = 40


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    The first partition is ``(n)`` and the last is ``(1, ..., 1)``; ``n = 0``
    yields only the empty partition.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # drop trailing ones, then decrement the last part > 1
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        v = parts.pop() - 1
        rest = ones + 1
        parts.append(v)
        while rest > v:
            parts.append(v)
            rest -= v
        if rest:
            parts.append(rest)


def conjugate(lam: Partition) -> Partition:
    parts = lam.parts
    if not parts:
        return lam
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook lengths of all cells of ``lam``, sorted in decreasing order.

    The hook of cell (k, j) is arm + leg + 1 with arm = lam_k - j and
    leg = lam'_j - k.
    """
    cols = conjugate(lam).parts
    hooks = [
        (row - j) + (cols[j - 1] - k) + 1
        for k, row in enumerate(lam.parts, start=1)
        for j in range(1, row + 1)
    ]
    hooks.sort(reverse=True)
    return tuple(hooks)


def count_hooks_equal(lam: Partition, t: int) -> int:
    _check_t(t)
    return sum(1 for h in hook_lengths(lam) if h == t)


def count_hooks_multiple(lam: Partition, t: int) -> int:
    _check_t(t)
    return sum(1 for h in hook_lengths(lam) if h % t == 0)


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    q, r = divmod(math.factorial(lam.weight), math.prod(hook_lengths(lam)))
    if r:
        raise HookComputationError(f"hook product does not divide {lam.weight}! for {lam}")
    return q


def brute_force_distribution(
    n: int, t: int, flavor: Flavor | str, guard: int = BRUTE_FORCE_GUARD
) -> HookDistribution:
    """Tabulate the hook statistic over every partition of ``n``."""
    _check_t(t)
    flavor = Flavor.parse(flavor)
    if n > guard:
        raise ResourceGuardError(
            f"brute-force enumeration refused for n={n} > guard {guard}; "
            "use the series engine or raise the guard"
        )
    stat = count_hooks_equal if flavor is Flavor.EQUAL else count_hooks_multiple
    counts = Counter(stat(lam, t) for lam in enumerate_partitions(n))
    return HookDistribution(n, t, flavor, dict(counts), sum(counts.values()))


def _check_t(t: int) -> None:
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
