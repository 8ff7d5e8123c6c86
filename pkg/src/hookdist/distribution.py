"""The exact-count record shared by the enumeration and series paths."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Number = Union[int, float]


class Flavor(str, enum.Enum):
    """Which hook statistic is counted.

    ``EQUAL`` counts hooks of length exactly ``t``; ``MULTIPLE`` counts hooks
    whose length is divisible by ``t``.
    """

    EQUAL = "equal"
    MULTIPLE = "multiple"

    @classmethod
    def parse(cls, value: "Flavor | str") -> "Flavor":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown flavor {value!r}; expected 'equal' or 'multiple'") from None


@dataclass(frozen=True)
class HookDistribution:
    """Counts of partitions of ``n`` by the value of a hook statistic.

    ``counts`` maps a statistic value ``m`` to the number of partitions of
    ``n`` attaining it. Zero counts are not stored. ``total`` is p(n).
    Exact distributions hold Python ints; float-ring ones hold floats.
    """

    n: int
    t: int
    flavor: Flavor
    counts: dict[int, Number]
    total: Number
    _support: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or self.t < 1:
            raise ValueError(f"need n >= 0 and t >= 1, got n={self.n}, t={self.t}")
        object.__setattr__(self, "flavor", Flavor.parse(self.flavor))
        clean = {int(m): c for m, c in sorted(self.counts.items()) if c != 0}
        if any(c < 0 for c in clean.values()):
            raise ValueError("negative count in distribution")
        object.__setattr__(self, "counts", clean)
        object.__setattr__(self, "_support", tuple(clean))

    @property
    def exact(self) -> bool:
        return isinstance(self.total, int) and all(isinstance(c, int) for c in self.counts.values())

    @property
    def support(self) -> tuple[int, ...]:
        return self._support

    def __getitem__(self, m: int) -> Number:
        return self.counts.get(m, 0)

    def probabilities(self) -> dict[int, Fraction | float]:
        if self.exact:
            return {m: Fraction(c, self.total) for m, c in self.counts.items()}
        return {m: c / self.total for m, c in self.counts.items()}

    def to_record(self) -> dict:
        """Export in the interchange schema: counts as decimal strings, sorted by m."""
        return {
            "n": self.n,
            "t": self.t,
            "flavor": self.flavor.value,
            "total": _decimal(self.total),
            "counts": [[m, _decimal(c)] for m, c in self.counts.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_record(cls, record: dict) -> "HookDistribution":
        return cls(
            n=int(record["n"]),
            t=int(record["t"]),
            flavor=Flavor.parse(record["flavor"]),
            counts={int(m): _parse_decimal(c) for m, c in record["counts"]},
            total=_parse_decimal(record["total"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "HookDistribution":
        return cls.from_record(json.loads(text))


def _decimal(value: Number) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _parse_decimal(text: str) -> Number:
    try:
        return int(text)
    except ValueError:
        return float(text)
