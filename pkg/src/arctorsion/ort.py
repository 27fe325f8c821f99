"""Crossing sets, the ort operator and its closure, and fountain profiles."""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import INF, IntInterval, IntervalSet
from .region import ArcRegion, Trapezoid


def _crossing_boxes(t: Trapezoid) -> list[Trapezoid]:
    """Arcs ``(a, b)`` crossed by at least one arc of the nonempty trapezoid ``t``.

    A witness ``(m, n)`` either has ``m < a < n < b`` or ``a < m < b < n``.
    Eliminating the witness leaves, in each case, bounds on one endpoint of
    ``(a, b)`` plus a one-sided bound on the other; no diagonal constraint
    survives beyond ``b - a >= 2``.
    """
    m1, m2 = t.mi.lo, t.mi.hi
    n1, n2 = t.ni.lo, t.ni.hi
    d1, d2 = t.dlo, t.dhi
    out = []
    # witness to the left: m <= a-1, a+1 <= n <= b-1
    a_rng = IntInterval.make(max(m1 + 1, n1 - d2 + 1), min(n2 - 1, m2 + d2 - 1))
    if a_rng is not None:
        out.append(Trapezoid(a_rng, IntInterval(max(n1 + 1, m1 + d1 + 1), INF)))
    # witness to the right: a+1 <= m <= b-1, n >= b+1
    b_rng = IntInterval.make(max(m1 + 1, n1 - d2 + 1), min(n2 - 1, m2 + d2 - 1))
    if b_rng is not None:
        out.append(Trapezoid(IntInterval(-INF, min(m2 - 1, n2 - d1 - 1)), b_rng))
    return out


def cross_set(r: ArcRegion) -> ArcRegion:
    """All arcs crossing at least one arc of ``r``."""
    boxes = []
    for t in r.parts:
        boxes.extend(_crossing_boxes(t))
    return ArcRegion.from_trapezoids(boxes)


def ort(r: ArcRegion) -> ArcRegion:
    """All arcs crossing no arc of ``r``."""
    return ~cross_set(r)


def closure(r: ArcRegion) -> ArcRegion:
    """``ort(ort(r))``: the smallest ort-closed region containing ``r``."""
    return ort(ort(r))


@dataclass(frozen=True)
class FountainProfile:
    left: IntervalSet
    right: IntervalSet

    @property
    def fountains(self) -> IntervalSet:
        return self.left & self.right

    @property
    def locally_finite(self) -> bool:
        return self.left.is_empty() and self.right.is_empty()

    @property
    def left_only(self) -> IntervalSet:
        return self.left - self.right

    @property
    def right_only(self) -> IntervalSet:
        return self.right - self.left


def fountains(r: ArcRegion) -> FountainProfile:
    """Left fountains receive infinitely many arcs ``(m, e)``; right fountains emit infinitely many ``(e, n)``."""
    left, right = [], []
    for t in r.parts:
        if t.dhi != INF:
            continue
        if t.mi.lo == -INF:
            left.append(t.ni)
        if t.ni.hi == INF:
            right.append(t.mi)
    return FountainProfile(IntervalSet(tuple(left)), IntervalSet(tuple(right)))


def is_locally_finite(r: ArcRegion) -> bool:
    return fountains(r).locally_finite
