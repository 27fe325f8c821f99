"""Exact arc sets as finite unions of integer trapezoids.

A trapezoid is ``{(m, n) : m in I, n in J, dlo <= n - m <= dhi}``.  Every
region is stored on a grid: sorted breakpoints for ``m``, ``n`` and the
diagonal ``n - m`` cut the arc half-plane into cells, each of which is itself
a trapezoid, and the region is a boolean mask over the cells.  Boolean
operations refine two grids to their common breakpoints and combine masks, so
they are exact by construction.  Cells whose constraints cannot be met by any
arc are "don't care" and are always stored as False.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .arcs import Arc, Window, mirror_arc
from .intervals import INF, Bound, IntInterval, IntervalSet, as_bound

FULL = IntInterval()


@dataclass(frozen=True)
class Trapezoid:
    mi: IntInterval = FULL
    ni: IntInterval = FULL
    dlo: int = 2
    dhi: Bound = INF

    def __post_init__(self):
        dlo, dhi = int(self.dlo), as_bound(self.dhi)
        if dlo < 2:
            raise ValueError(f"diagonal lower bound {dlo} < 2")
        if dhi < dlo:
            raise ValueError(f"diagonal band [{dlo},{dhi}] is inverted")
        object.__setattr__(self, "dlo", dlo)
        object.__setattr__(self, "dhi", dhi)

    def contains(self, m: int, n: int) -> bool:
        return m in self.mi and n in self.ni and self.dlo <= n - m <= self.dhi

    def d_range(self) -> Optional[IntInterval]:
        return IntInterval.make(
            max(self.dlo, self.ni.lo - self.mi.hi), min(self.dhi, self.ni.hi - self.mi.lo)
        )

    def m_range(self) -> Optional[IntInterval]:
        if self.is_empty():
            return None
        return IntInterval.make(
            max(self.mi.lo, self.ni.lo - self.dhi), min(self.mi.hi, self.ni.hi - self.dlo)
        )

    def n_range(self) -> Optional[IntInterval]:
        if self.is_empty():
            return None
        return IntInterval.make(
            max(self.ni.lo, self.mi.lo + self.dlo), min(self.ni.hi, self.mi.hi + self.dhi)
        )

    def is_empty(self) -> bool:
        # two-variable difference constraints: feasible iff the diagonal projection is
        return self.d_range() is None

    def tight(self) -> Optional["Trapezoid"]:
        """The canonical form: every bound replaced by the exact projection.

        Two nonempty trapezoids denote the same set iff their tight forms are equal.
        """
        d = self.d_range()
        if d is None:
            return None
        return Trapezoid(self.m_range(), self.n_range(), d.lo, d.hi)

    def is_finite(self) -> bool:
        t = self.tight()
        return t is None or (t.mi.bounded and t.ni.bounded)

    def lefts(self, n: int) -> Optional[IntInterval]:
        """``{m : (m, n) in self}``."""
        if n not in self.ni:
            return None
        return IntInterval.make(max(self.mi.lo, n - self.dhi), min(self.mi.hi, n - self.dlo))

    def rights(self, m: int) -> Optional[IntInterval]:
        """``{n : (m, n) in self}``."""
        if m not in self.mi:
            return None
        return IntInterval.make(max(self.ni.lo, m + self.dlo), min(self.ni.hi, m + self.dhi))

    def sample(self) -> Arc:
        """A member arc, with left end as close to 0 as the trapezoid allows."""
        mr = self.m_range()
        if mr is None:
            raise ValueError("empty trapezoid has no sample")
        m = int(min(max(0, mr.lo), mr.hi))
        nr = self.rights(m)
        return Arc(m, int(min(max(m + 2, nr.lo), nr.hi)))

    def arcs(self) -> Iterator[Arc]:
        t = self.tight()
        if t is None:
            return
        for m in t.mi:
            nr = t.rights(m)
            if nr is not None:
                for n in nr:
                    yield Arc(m, n)

    def constants(self) -> list[int]:
        vals = [self.mi.lo, self.mi.hi, self.ni.lo, self.ni.hi, self.dlo, self.dhi]
        return [int(v) for v in vals if not math.isinf(v)]

    def shift(self, k: int) -> "Trapezoid":
        return Trapezoid(self.mi.shift(-k), self.ni.shift(-k), self.dlo, self.dhi)

    def mirror(self) -> "Trapezoid":
        return Trapezoid(self.ni.negate(), self.mi.negate(), self.dlo, self.dhi)


def _cell_bounds(bps: Sequence[int], first_lo: Bound) -> tuple[np.ndarray, np.ndarray]:
    lows = np.array([first_lo] + [b + 1 for b in bps], dtype=float)
    highs = np.array(list(bps) + [INF], dtype=float)
    return lows, highs


def _index_map(fine: Sequence[int], coarse: Sequence[int]) -> np.ndarray:
    highs = list(fine) + [INF]
    return np.array([bisect_left(coarse, h) for h in highs], dtype=np.intp)


def _bound(x: float) -> Bound:
    return as_bound(x)


class ArcRegion:
    """An exact, possibly infinite, set of arcs.

    Supports ``|``, ``&``, ``-``, ``~`` (complement within all arcs), ``<=``
    (subset), ``==`` (set equality) and ``in`` for arcs.  Values are immutable.
    """

    __slots__ = ("_bm", "_bn", "_bd", "_cells", "_feas", "_parts")

    def __init__(self, bm, bn, bd, cells, feas=None, *, _reduce=True):
        self._bm = tuple(int(b) for b in bm)
        self._bn = tuple(int(b) for b in bn)
        self._bd = tuple(int(b) for b in bd)
        if feas is None:
            feas = _feasibility(self._bm, self._bn, self._bd)
        self._feas = feas
        self._cells = cells & feas
        self._parts = None
        if _reduce:
            self._reduce()

    # construction

    @classmethod
    def empty(cls) -> "ArcRegion":
        return cls((), (), (), np.zeros((1, 1, 1), dtype=bool))

    @classmethod
    def all(cls) -> "ArcRegion":
        return cls((), (), (), np.ones((1, 1, 1), dtype=bool))

    @classmethod
    def from_trapezoids(cls, traps: Iterable[Trapezoid]) -> "ArcRegion":
        traps = [t for t in traps if not t.is_empty()]
        bm, bn, bd = set(), set(), set()
        for t in traps:
            for iv, acc in ((t.mi, bm), (t.ni, bn)):
                if iv.lo != -INF:
                    acc.add(iv.lo - 1)
                if iv.hi != INF:
                    acc.add(iv.hi)
            if t.dlo > 2:
                bd.add(t.dlo - 1)
            if t.dhi != INF:
                bd.add(t.dhi)
        bm, bn, bd = sorted(bm), sorted(bn), sorted(bd)
        cells = np.zeros((len(bm) + 1, len(bn) + 1, len(bd) + 1), dtype=bool)
        for t in traps:
            i0, i1 = bisect_left(bm, t.mi.lo), bisect_left(bm, t.mi.hi)
            j0, j1 = bisect_left(bn, t.ni.lo), bisect_left(bn, t.ni.hi)
            k0, k1 = bisect_left(bd, t.dlo), bisect_left(bd, t.dhi)
            cells[i0 : i1 + 1, j0 : j1 + 1, k0 : k1 + 1] = True
        return cls(bm, bn, bd, cells)

    @classmethod
    def from_arcs(cls, arcs: Iterable) -> "ArcRegion":
        traps = []
        for a in arcs:
            a = a if isinstance(a, Arc) else Arc(*a)
            traps.append(Trapezoid(IntInterval.point(a.m), IntInterval.point(a.n)))
        return cls.from_trapezoids(traps)

    # grid plumbing

    def _refined(self, bm, bn, bd) -> np.ndarray:
        im = _index_map(bm, self._bm)
        jn = _index_map(bn, self._bn)
        kd = _index_map(bd, self._bd)
        return self._cells[np.ix_(im, jn, kd)]

    def _common(self, other: "ArcRegion"):
        bm = sorted(set(self._bm) | set(other._bm))
        bn = sorted(set(self._bn) | set(other._bn))
        bd = sorted(set(self._bd) | set(other._bd))
        # refinement can copy True into cells holding no arcs; clear them
        feas = _feasibility(bm, bn, bd)
        return bm, bn, bd, self._refined(bm, bn, bd) & feas, other._refined(bm, bn, bd) & feas

    def _reduce(self) -> None:
        """Drop every breakpoint whose two neighbouring cell slabs agree wherever both are feasible."""
        bps = [list(self._bm), list(self._bn), list(self._bd)]
        cells, feas = self._cells, self._feas
        changed = True
        while changed:
            changed = False
            for axis in range(3):
                t = len(bps[axis]) - 1
                while t >= 0:
                    a = np.take(cells, t, axis=axis)
                    b = np.take(cells, t + 1, axis=axis)
                    fa = np.take(feas, t, axis=axis)
                    fb = np.take(feas, t + 1, axis=axis)
                    if not np.any(fa & fb & (a != b)):
                        cells = _merge_slab(cells, t, axis, a | b)
                        feas = _merge_slab(feas, t, axis, fa | fb)
                        del bps[axis][t]
                        changed = True
                    t -= 1
        self._bm, self._bn, self._bd = (tuple(b) for b in bps)
        self._cells, self._feas = cells, feas

    def _combine(self, other: "ArcRegion", op) -> "ArcRegion":
        bm, bn, bd, a, b = self._common(other)
        return ArcRegion(bm, bn, bd, op(a, b))

    # Boolean algebra

    def __or__(self, other: "ArcRegion") -> "ArcRegion":
        return self._combine(other, np.logical_or)

    def __and__(self, other: "ArcRegion") -> "ArcRegion":
        return self._combine(other, np.logical_and)

    def __sub__(self, other: "ArcRegion") -> "ArcRegion":
        return self._combine(other, lambda a, b: a & ~b)

    def __xor__(self, other: "ArcRegion") -> "ArcRegion":
        return self._combine(other, np.logical_xor)

    def __invert__(self) -> "ArcRegion":
        return ArcRegion(self._bm, self._bn, self._bd, ~self._cells, self._feas)

    def is_empty(self) -> bool:
        return not self._cells.any()

    def __bool__(self) -> bool:
        return not self.is_empty()

    def __le__(self, other: "ArcRegion") -> bool:
        _, _, _, a, b = self._common(other)
        return not np.any(a & ~b)

    def __ge__(self, other: "ArcRegion") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArcRegion):
            return NotImplemented
        _, _, _, a, b = self._common(other)
        return bool(np.array_equal(a, b))

    __hash__ = None

    def __contains__(self, a) -> bool:
        m, n = a
        if n - m < 2:
            return False
        i = bisect_left(self._bm, m)
        j = bisect_left(self._bn, n)
        k = bisect_left(self._bd, n - m)
        return bool(self._cells[i, j, k])

    # transformations

    def shift(self, k: int) -> "ArcRegion":
        """Pointwise (m, n) -> (m - k, n - k)."""
        return ArcRegion(
            [b - k for b in self._bm], [b - k for b in self._bn], self._bd,
            self._cells, self._feas, _reduce=False,
        )

    def mirror(self) -> "ArcRegion":
        """Pointwise (m, n) -> (-n, -m)."""
        bm = [-b - 1 for b in reversed(self._bn)]
        bn = [-b - 1 for b in reversed(self._bm)]
        cells = self._cells.transpose(1, 0, 2)[::-1, ::-1, :].copy()
        feas = self._feas.transpose(1, 0, 2)[::-1, ::-1, :].copy()
        return ArcRegion(bm, bn, self._bd, cells, feas, _reduce=False)

    # queries

    @property
    def parts(self) -> tuple[Trapezoid, ...]:
        """Pairwise disjoint, nonempty, tight trapezoids whose union is the region."""
        if self._parts is None:
            self._parts = tuple(self._boxes())
        return self._parts

    def _boxes(self) -> Iterator[Trapezoid]:
        todo = self._cells.copy()
        free = ~self._feas
        ni_, nj, nk = todo.shape
        mlo, mhi = _cell_bounds(self._bm, -INF)
        nlo, nhi = _cell_bounds(self._bn, -INF)
        dlo, dhi = _cell_bounds(self._bd, 2)
        for i, j, k in np.argwhere(self._cells):
            if not todo[i, j, k]:
                continue
            k2 = k
            while k2 + 1 < nk and (todo[i, j, k2 + 1] or free[i, j, k2 + 1]):
                k2 += 1
            j2 = j
            while j2 + 1 < nj and np.all(todo[i, j2 + 1, k : k2 + 1] | free[i, j2 + 1, k : k2 + 1]):
                j2 += 1
            i2 = i
            while i2 + 1 < ni_ and np.all(
                todo[i2 + 1, j : j2 + 1, k : k2 + 1] | free[i2 + 1, j : j2 + 1, k : k2 + 1]
            ):
                i2 += 1
            todo[i : i2 + 1, j : j2 + 1, k : k2 + 1] = False
            box = Trapezoid(
                IntInterval(_bound(mlo[i]), _bound(mhi[i2])),
                IntInterval(_bound(nlo[j]), _bound(nhi[j2])),
                _bound(dlo[k]),
                _bound(dhi[k2]),
            )
            yield box.tight()

    def max_constant(self) -> int:
        """Largest absolute finite constant among the canonical parts (0 when empty)."""
        return max((abs(c) for t in self.parts for c in t.constants()), default=0)

    def is_finite(self) -> bool:
        return all(t.is_finite() for t in self.parts)

    def arcs(self) -> list[Arc]:
        """All member arcs, sorted; only for finite regions."""
        if not self.is_finite():
            raise ValueError("cannot list the arcs of an infinite region")
        return sorted(a for t in self.parts for a in t.arcs())

    def sample(self) -> Arc:
        """Some member arc (deterministic); the region must be nonempty."""
        if not self.parts:
            raise ValueError("empty region has no sample")
        return min((t.sample() for t in self.parts), key=lambda a: (abs(a.m) + abs(a.n), a))

    def lefts(self, n: int) -> IntervalSet:
        """``{m : (m, n) in self}``."""
        return IntervalSet(tuple(t.lefts(n) for t in self.parts))

    def rights(self, m: int) -> IntervalSet:
        """``{n : (m, n) in self}``."""
        return IntervalSet(tuple(t.rights(m) for t in self.parts))

    def member_matrix(self, lo: int, hi: int) -> np.ndarray:
        """Boolean matrix ``M[m - lo, n - lo]`` of membership for all arcs inside ``[lo, hi]``."""
        xs = np.arange(lo, hi + 1)
        im = np.searchsorted(np.array(self._bm, dtype=np.int64), xs, side="left")
        jn = np.searchsorted(np.array(self._bn, dtype=np.int64), xs, side="left")
        d = xs[None, :] - xs[:, None]
        kd = np.searchsorted(np.array(self._bd, dtype=np.int64), np.maximum(d, 2), side="left")
        out = self._cells[im[:, None], jn[None, :], kd]
        return out & (d >= 2)

    def enumerate_window(self, w: Window) -> list[Arc]:
        mat = self.member_matrix(w.lo, w.hi)
        return [Arc(int(i) + w.lo, int(j) + w.lo) for i, j in np.argwhere(mat)]

    def __repr__(self) -> str:
        from .dsl import format_region

        return f"ArcRegion({format_region(self)!r})"

    def __str__(self) -> str:
        from .dsl import format_region

        return format_region(self)


def _merge_slab(arr: np.ndarray, t: int, axis: int, merged: np.ndarray) -> np.ndarray:
    out = np.delete(arr, t + 1, axis=axis)
    idx = [slice(None)] * 3
    idx[axis] = t
    out[tuple(idx)] = merged
    return out


def _feasibility(bm, bn, bd) -> np.ndarray:
    mlo, mhi = _cell_bounds(bm, -INF)
    nlo, nhi = _cell_bounds(bn, -INF)
    dlo, dhi = _cell_bounds(bd, 2)
    with np.errstate(invalid="ignore"):
        least = nlo[None, :, None] - mhi[:, None, None]
        most = nhi[None, :, None] - mlo[:, None, None]
    return (least <= dhi[None, None, :]) & (most >= dlo[None, None, :])


# sugar constructors


def box(mi: IntInterval = FULL, ni: IntInterval = FULL, diag: Optional[IntInterval] = None) -> ArcRegion:
    if diag is None:
        return ArcRegion.from_trapezoids([Trapezoid(mi, ni)])
    clipped = IntInterval.make(max(2, diag.lo), diag.hi)
    if clipped is None:
        return ArcRegion.empty()
    return ArcRegion.from_trapezoids([Trapezoid(mi, ni, clipped.lo, clipped.hi)])


def lower(b: int) -> ArcRegion:
    """All arcs with right end at most ``b``."""
    return box(FULL, IntInterval(-INF, b))


def upper(a: int) -> ArcRegion:
    """All arcs with left end at least ``a``."""
    return box(IntInterval(a, INF), FULL)


def leftray(e: int, t: int) -> ArcRegion:
    """Arcs ``(m, e)`` with ``m <= t``."""
    return box(IntInterval(-INF, t), IntInterval.point(e))


def rightray(e: int, t: int) -> ArcRegion:
    """Arcs ``(e, n)`` with ``n >= t``."""
    return box(IntInterval.point(e), IntInterval(t, INF))


def from_arcs(arcs: Iterable) -> ArcRegion:
    return ArcRegion.from_arcs(arcs)


# function-style surface


def member(r: ArcRegion, a: Arc) -> bool:
    return a in r


def union(r: ArcRegion, s: ArcRegion) -> ArcRegion:
    return r | s


def intersect(r: ArcRegion, s: ArcRegion) -> ArcRegion:
    return r & s


def complement(r: ArcRegion) -> ArcRegion:
    return ~r


def difference(r: ArcRegion, s: ArcRegion) -> ArcRegion:
    return r - s


def equals(r: ArcRegion, s: ArcRegion) -> bool:
    return r == s


def is_empty(r: ArcRegion) -> bool:
    return r.is_empty()


def is_subset(r: ArcRegion, s: ArcRegion) -> bool:
    return r <= s


def shift_region(r: ArcRegion, k: int) -> ArcRegion:
    return r.shift(k)


def mirror_region(r: ArcRegion) -> ArcRegion:
    return r.mirror()


def enumerate_window(r: ArcRegion, w: Window) -> list[Arc]:
    return r.enumerate_window(w)


def mirror_arcs(arcs: Iterable[Arc]) -> list[Arc]:
    return sorted(mirror_arc(a) for a in arcs)
