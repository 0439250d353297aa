"""Finite unions of real intervals with explicit endpoint openness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Interval:
    lo: float
    lo_closed: bool
    hi: float
    hi_closed: bool

    def __post_init__(self) -> None:
        if not self.lo < self.hi and not (self.lo == self.hi and self.lo_closed and self.hi_closed):
            raise ValueError(f"empty interval {self}")

    @classmethod
    def closed(cls, lo: float, hi: float) -> Interval:
        return cls(lo, True, hi, True)

    @classmethod
    def point(cls, v: float) -> Interval:
        return cls(v, True, v, True)

    @staticmethod
    def is_nonempty(lo: float, lo_closed: bool, hi: float, hi_closed: bool) -> bool:
        return lo < hi or (lo == hi and lo_closed and hi_closed)

    def __contains__(self, v: float) -> bool:
        above = v >= self.lo if self.lo_closed else v > self.lo
        below = v <= self.hi if self.hi_closed else v < self.hi
        return above and below

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def to_dict(self) -> dict:
        return {"lo": self.lo, "lo_closed": self.lo_closed, "hi": self.hi, "hi_closed": self.hi_closed}

    def __str__(self) -> str:
        return f"{'[' if self.lo_closed else '('}{self.lo:g}, {self.hi:g}{']' if self.hi_closed else ')'}"


@dataclass(frozen=True)
class PriceIntervalSet:
    """Sorted, pairwise disjoint, nonempty intervals."""

    intervals: tuple[Interval, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        ivs = tuple(sorted(self.intervals, key=lambda iv: (iv.lo, not iv.lo_closed)))
        for a, b in zip(ivs, ivs[1:]):
            touching = a.hi == b.lo and a.hi_closed and b.lo_closed
            if a.hi > b.lo or touching:
                raise ValueError(f"overlapping intervals {a} and {b}")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def of(cls, intervals: Iterable[Interval]) -> PriceIntervalSet:
        return cls(tuple(intervals))

    def __contains__(self, v: float) -> bool:
        return any(v in iv for iv in self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def endpoints(self) -> list[float]:
        return [v for iv in self.intervals for v in (iv.lo, iv.hi)]

    def to_dict(self) -> dict:
        return {"intervals": [iv.to_dict() for iv in self.intervals]}

    def __str__(self) -> str:
        return " U ".join(str(iv) for iv in self.intervals) or "{}"
