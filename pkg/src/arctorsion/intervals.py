"""Integer intervals with optional infinite ends, and finite unions of them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

INF = math.inf
Bound = Union[int, float]


def as_bound(value) -> Bound:
    """Coerce *value* to an ``int`` or to one of the two infinities."""
    if isinstance(value, float) or hasattr(value, "dtype"):
        value = float(value)
        if math.isnan(value):
            raise ValueError("NaN is not a valid interval bound")
        if math.isinf(value):
            return value
        if not value.is_integer():
            raise ValueError(f"non-integral bound {value!r}")
        return int(value)
    return int(value)


def fmt_bound(value: Bound) -> str:
    if value == INF:
        return "+inf"
    if value == -INF:
        return "-inf"
    return str(value)


@dataclass(frozen=True, order=True)
class IntInterval:
    """Closed integer interval ``[lo, hi]``; either end may be infinite.

    Empty intervals are not representable as values: operations that can
    produce one return ``None`` instead.
    """

    lo: Bound = -INF
    hi: Bound = INF

    def __post_init__(self):
        lo, hi = as_bound(self.lo), as_bound(self.hi)
        if lo == INF or hi == -INF:
            raise ValueError(f"interval cannot start at +inf or end at -inf: {lo}, {hi}")
        if lo > hi:
            raise ValueError(f"inverted interval [{fmt_bound(lo)},{fmt_bound(hi)}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def make(cls, lo, hi) -> Optional["IntInterval"]:
        """Like the constructor, but returns ``None`` for an empty range."""
        lo, hi = as_bound(lo), as_bound(hi)
        if lo > hi or lo == INF or hi == -INF:
            return None
        return cls(lo, hi)

    @classmethod
    def point(cls, x: int) -> "IntInterval":
        return cls(x, x)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    @property
    def bounded(self) -> bool:
        return self.lo != -INF and self.hi != INF

    def intersect(self, other: "IntInterval") -> Optional["IntInterval"]:
        return IntInterval.make(max(self.lo, other.lo), min(self.hi, other.hi))

    def shift(self, k: int) -> "IntInterval":
        return IntInterval(self.lo + k, self.hi + k)

    def negate(self) -> "IntInterval":
        return IntInterval(-self.hi, -self.lo)

    def __iter__(self) -> Iterator[int]:
        if not self.bounded:
            raise ValueError(f"cannot iterate the unbounded interval {self}")
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        if not self.bounded:
            raise ValueError(f"unbounded interval {self} has no length")
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        left = "(" if self.lo == -INF else "["
        right = ")" if self.hi == INF else "]"
        return f"{left}{fmt_bound(self.lo)},{fmt_bound(self.hi)}{right}"


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of integer intervals, kept sorted, disjoint and non-adjacent."""

    intervals: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", _normalize(self.intervals))

    @classmethod
    def of(cls, *items: Union[IntInterval, int, None]) -> "IntervalSet":
        ivs = []
        for item in items:
            if item is None:
                continue
            ivs.append(IntInterval.point(item) if isinstance(item, int) else item)
        return cls(tuple(ivs))

    @classmethod
    def everything(cls) -> "IntervalSet":
        return cls((IntInterval(),))

    def __iter__(self) -> Iterator[IntInterval]:
        return iter(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def is_empty(self) -> bool:
        return not self.intervals

    def __contains__(self, x) -> bool:
        return any(x in iv for iv in self.intervals)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.intervals + other.intervals)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.intervals:
            for b in other.intervals:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return IntervalSet(tuple(out))

    def complement(self) -> "IntervalSet":
        out = []
        cursor: Bound = -INF
        for iv in self.intervals:
            if iv.lo != -INF and (cursor == -INF or cursor <= iv.lo - 1):
                out.append(IntInterval(cursor, iv.lo - 1))
            cursor = iv.hi + 1
        if cursor != INF:
            out.append(IntInterval(cursor, INF))
        return IntervalSet(tuple(out))

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self & other.complement()

    def __le__(self, other: "IntervalSet") -> bool:
        return (self - other).is_empty()

    def min(self) -> Bound:
        if not self.intervals:
            raise ValueError("min of an empty interval set")
        return self.intervals[0].lo

    def max(self) -> Bound:
        if not self.intervals:
            raise ValueError("max of an empty interval set")
        return self.intervals[-1].hi

    def representative(self) -> int:
        """An element of the set, chosen as close to 0 as possible."""
        best = None
        for iv in self.intervals:
            x = min(max(0, iv.lo), iv.hi)
            if best is None or abs(x) < abs(best):
                best = x
        if best is None:
            raise ValueError("empty interval set has no representative")
        return int(best)

    def __str__(self) -> str:
        if not self.intervals:
            return "empty"
        return " | ".join(str(iv) for iv in self.intervals)


def _normalize(items: Iterable[IntInterval]) -> tuple:
    ivs = sorted(iv for iv in items if iv is not None)
    merged: list[IntInterval] = []
    for iv in ivs:
        if merged and (merged[-1].hi == INF or iv.lo <= merged[-1].hi + 1):
            last = merged[-1]
            if iv.hi > last.hi:
                merged[-1] = IntInterval(last.lo, iv.hi)
        else:
            merged.append(iv)
    return tuple(merged)
