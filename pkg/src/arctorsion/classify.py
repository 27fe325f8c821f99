"""Decision procedures for arc regions.

Each subcategory of the cluster category of type A-infinity corresponds to a
set of arcs.  Here a set is tested for being precovering or preenveloping,
ort-closed, a torsion class, the aisle of a t-structure or the aisle of a
co-t-structure.  Explicit precovers and preenvelopes can also be built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .arcs import Arc, Window, hom_nonzero, mirror_arc
from .errors import PreconditionError, TheoremViolation
from .intervals import INF, IntInterval, IntervalSet
from .ort import FountainProfile, closure, fountains, ort
from .region import ArcRegion, Trapezoid, box, lower

# extra room around the largest representation constant for window-mode condition (i)
WINDOW_SLACK = 8


@dataclass(frozen=True)
class Verdict:
    """Outcome of a condition check.

    ``status`` is ``"holds"``, ``"fails"`` or ``"window-approximate"`` (no
    failure inside ``window``, nothing claimed outside it).
    """

    status: str
    pair: Optional[tuple] = None
    missing: Optional[Arc] = None
    window: Optional[Window] = None

    @property
    def ok(self) -> bool:
        return self.status != "fails"

    def __str__(self) -> str:
        if self.status == "fails":
            if self.pair is not None:
                return f"fails: {self.pair[0]} x {self.pair[1]} missing {self.missing}"
            return f"fails: missing {self.missing}"
        if self.status == "window-approximate":
            return f"window-approximate {self.window}"
        return "holds"


def _companions(x: Arc, y: Arc):
    (a, b), (c, d) = (x, y) if x.m < y.m else (y, x)
    for p, q in ((a, c), (c, b), (b, d), (a, d)):
        if q - p >= 2:
            yield Arc(p, q)


def check_condition_i(r: ArcRegion, mode: str = "exact") -> Verdict:
    """Every arc companion of a crossing pair in ``r`` must lie in ``r``.

    ``mode="exact"`` needs a finite region.  ``mode="window"`` inspects all
    pairs with endpoints in ``[-M, M]``, ``M = r.max_constant() + 8``.
    """
    if mode == "exact":
        if not r.is_finite():
            raise PreconditionError("exact condition (i) check needs a finite region")
        arcs = r.arcs()
        members = set(arcs)
        for i, x in enumerate(arcs):
            for y in arcs[i + 1 :]:
                if x.m < y.m < x.n < y.n or y.m < x.m < y.n < x.n:
                    for c in _companions(x, y):
                        if c not in members:
                            return Verdict("fails", (x, y), c)
        return Verdict("holds")
    if mode != "window":
        raise ValueError(f"unknown mode {mode!r}")
    M = r.max_constant() + WINDOW_SLACK
    w = Window(-M, M)
    found = _window_condition_i(r, w)
    if found is not None:
        return Verdict("fails", found[0], found[1])
    return Verdict("window-approximate", window=w)


def _window_condition_i(r: ArcRegion, w: Window):
    lo = w.lo
    G = r.member_matrix(w.lo, w.hi)
    idx = np.argwhere(G)
    if len(idx) == 0:
        return None
    A, B = idx[:, 0], idx[:, 1]

    def has(p, q):
        # companions that are not arcs impose nothing
        ok = np.ones(p.shape, dtype=bool)
        real = q - p >= 2
        ok[real] = G[p[real], q[real]]
        return ok

    for t in range(len(idx)):
        a, b = A[t], B[t]
        sel = (a < A) & (A < b) & (b < B)
        if not sel.any():
            continue
        c, d = A[sel], B[sel]
        av = np.full(c.shape, a)
        bv = np.full(c.shape, b)
        for p, q in ((av, c), (c, bv), (bv, d), (av, d)):
            bad = ~has(p, q)
            if bad.any():
                u = int(np.argmax(bad))
                x = Arc(int(a) + lo, int(b) + lo)
                y = Arc(int(c[u]) + lo, int(d[u]) + lo)
                return (x, y), Arc(int(p[u]) + lo, int(q[u]) + lo)
    return None


def condition_ii_required(profile: FountainProfile) -> ArcRegion:
    """Arcs ``(a, b)`` with ``a`` a left-only fountain and ``b`` a right-only fountain."""
    return ArcRegion.from_trapezoids(
        Trapezoid(a, b) for a in profile.left_only for b in profile.right_only
    )


def check_condition_ii(r: ArcRegion) -> Verdict:
    missing = condition_ii_required(fountains(r)) - r
    if missing.is_empty():
        return Verdict("holds")
    return Verdict("fails", missing=missing.sample())


def is_ort_closed(r: ArcRegion) -> bool:
    return closure(r) == r


def is_precovering(r: ArcRegion) -> bool:
    """Every right fountain is also a left fountain."""
    prof = fountains(r)
    return prof.right <= prof.left


def is_preenveloping(r: ArcRegion) -> bool:
    """Every left fountain is also a right fountain."""
    return is_precovering(r.mirror())


def is_torsion_class(r: ArcRegion) -> bool:
    return is_precovering(r) and is_ort_closed(r)


def right_perp(r: ArcRegion) -> ArcRegion:
    """Arcs receiving no nonzero morphism from ``r``: the coaisle when ``r`` is a torsion class."""
    return ort(r).shift(1)


def left_perp(r: ArcRegion) -> ArcRegion:
    """Arcs with no nonzero morphism into ``r``."""
    return ort(r).shift(-1)


class Kind(str, Enum):
    ZERO = "Zero"
    ALL = "All"
    HALF_LINE = "HalfLine"
    NOT = "Not"


@dataclass(frozen=True)
class AisleType:
    kind: Kind
    n: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is Kind.HALF_LINE:
            return f"HalfLine({self.n})"
        return self.kind.value


def classify_t_structure(r: ArcRegion) -> AisleType:
    """Zero, All, HalfLine(n) (the region ``lower(n)``), or Not a t-structure aisle."""
    if not (is_torsion_class(r) and r.shift(1) <= r):
        return AisleType(Kind.NOT)
    if r.is_empty():
        return AisleType(Kind.ZERO)
    if r == ArcRegion.all():
        return AisleType(Kind.ALL)
    top = max(t.ni.hi for t in r.parts)
    if top == INF:
        raise TheoremViolation(f"shift-closed torsion class {r} has unbounded right ends")
    n = int(top)
    if r != lower(n):
        raise TheoremViolation(f"shift-closed torsion class {r} is not lower({n})")
    return AisleType(Kind.HALF_LINE, n)


def classify_co_t_structure(r: ArcRegion) -> AisleType:
    """Zero, All, or Not a co-t-structure aisle; nothing else can occur."""
    if not (is_torsion_class(r) and r.shift(-1) <= r):
        return AisleType(Kind.NOT)
    if r.is_empty():
        return AisleType(Kind.ZERO)
    if r == ArcRegion.all():
        return AisleType(Kind.ALL)
    raise TheoremViolation(f"inverse-shift-closed torsion class {r} is neither zero nor everything")


def _offending(s: IntervalSet) -> int:
    iv = s.intervals[0]
    return int(iv.lo) if iv.lo != -INF else s.representative()


def precover_construct(r: ArcRegion, x: Arc) -> list[Arc]:
    """Components of a right approximation of ``x`` by the subcategory of ``r``.

    For each line of arcs ``(p, c)`` with ``m + 2 <= c <= n`` take the arc of
    ``r`` with ``p <= m`` closest to ``x``.  Arcs of ``r`` in the forward part
    of the hammock (``m + 2 <= p <= n``, ``q >= n + 2``) are taken whole when
    there are finitely many; otherwise one arc on the rightmost fountain line
    ``c*`` is added, together with the finitely many forward arcs with
    ``p > c*`` that such an arc cannot reach.
    """
    prof = fountains(r)
    stray = prof.right - prof.left
    if stray:
        raise PreconditionError(
            f"not precovering: right fountain {_offending(stray)} is not a left fountain"
        )
    m, n = x.m, x.n
    out = set()
    for c in range(m + 2, n + 1):
        ps = r.lefts(c) & IntervalSet.of(IntInterval(-INF, m))
        if ps:
            out.add(Arc(int(ps.max()), c))
    forward = r & box(IntInterval(m + 2, n), IntInterval(n + 2, INF))
    if forward.is_finite():
        out.update(forward.arcs())
    else:
        lines = prof.right & IntervalSet.of(IntInterval(m + 2, n))
        c_star = int(lines.max())
        ps = r.lefts(c_star) & IntervalSet.of(IntInterval(-INF, m))
        if not ps:
            raise TheoremViolation(f"fountain line {c_star} has no arc left of {x}")
        out.add(Arc(int(ps.max()), c_star))
        beyond = forward & box(IntInterval(c_star + 1, INF), IntInterval())
        if not beyond.is_finite():
            raise TheoremViolation(f"infinitely many forward arcs of {x} beyond fountain line {c_star}")
        out.update(beyond.arcs())
    result = sorted(out)
    assert all(hom_nonzero(y, x) for y in result)
    return result


def preenvelope_construct(r: ArcRegion, x: Arc) -> list[Arc]:
    """Components of a left approximation of ``x``; the mirror image of ``precover_construct``."""
    prof = fountains(r)
    stray = prof.left - prof.right
    if stray:
        raise PreconditionError(
            f"not preenveloping: left fountain {_offending(stray)} is not a right fountain"
        )
    return sorted(mirror_arc(a) for a in precover_construct(r.mirror(), mirror_arc(x)))


@dataclass(frozen=True)
class ClassificationReport:
    fountains: FountainProfile
    locally_finite: bool
    condition_i: Verdict
    condition_ii: Verdict
    ort_closed: bool
    precovering: bool
    preenveloping: bool
    torsion_class: bool
    t_structure: AisleType
    co_t_structure: AisleType
    canonical_parts: int = field(default=0)

    def to_document(self) -> dict:
        """Flat key/value form; values are strings, booleans or integers."""
        return {
            "fountains.left": str(self.fountains.left),
            "fountains.right": str(self.fountains.right),
            "locally_finite": self.locally_finite,
            "condition_i": str(self.condition_i),
            "condition_ii": str(self.condition_ii),
            "ort_closed": self.ort_closed,
            "precovering": self.precovering,
            "preenveloping": self.preenveloping,
            "torsion_class": self.torsion_class,
            "t_structure": str(self.t_structure),
            "co_t_structure": str(self.co_t_structure),
            "canonical_parts": self.canonical_parts,
        }


def classify(r: ArcRegion) -> ClassificationReport:
    prof = fountains(r)
    cond_i = check_condition_i(r, "exact" if r.is_finite() else "window")
    ort_closed = is_ort_closed(r)
    precovering = prof.right <= prof.left
    torsion = ort_closed and precovering
    report = ClassificationReport(
        fountains=prof,
        locally_finite=prof.locally_finite,
        condition_i=cond_i,
        condition_ii=check_condition_ii(r),
        ort_closed=ort_closed,
        precovering=precovering,
        preenveloping=prof.left <= prof.right,
        torsion_class=torsion,
        t_structure=classify_t_structure(r),
        co_t_structure=classify_co_t_structure(r),
        canonical_parts=len(r.parts),
    )
    if report.t_structure.kind is not Kind.NOT and not report.torsion_class:
        raise TheoremViolation("t-structure aisle that is not a torsion class")
    return report
