"""Brute-force reference computations on finite windows, random generators,
and differential drivers that compare them with the symbolic engine.

Nothing here shares code with the symbolic ort computation: crossings are
counted directly on a membership matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .arcs import Arc, Window, cross
from .classify import Verdict, check_condition_i, check_condition_ii, is_ort_closed
from .dsl import format_region
from .intervals import INF, IntInterval
from .ort import fountains, ort
from .region import ArcRegion, Trapezoid

# probability that a generated interval end is unbounded
UNBOUNDED_BIAS = 0.3


@dataclass(frozen=True)
class OracleConfig:
    window: Window = Window(-16, 16)
    margin: int = 0
    seed: int = 0
    cases: int = 100

    def __post_init__(self):
        if self.margin < 0:
            raise ValueError("margin must be non-negative")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.cases < 0:
            raise ValueError("cases must be non-negative")


def required_margin(r: ArcRegion, w: Window) -> int:
    """Smallest margin for which ``brute_ort_window`` is guaranteed exact on ``w``.

    A crossing witness far outside the window can be slid along its column
    until it sits just past the representation constants, so the extended
    window must reach past both the constants and the window itself.  The
    empty region has no witnesses at all, so it needs no margin.
    """
    if r.is_empty():
        return 0
    return r.max_constant() + (w.hi - w.lo) + 2 + max(0, w.lo, -w.hi)


def _crossed_matrix(r: ArcRegion, w: Window, margin: int) -> np.ndarray:
    """``X[a - w.lo, b - w.lo]`` counts arcs of ``r`` in the extended window crossing ``(a, b)``."""
    lo, hi = w.lo - margin, w.hi + margin
    G = r.member_matrix(lo, hi).astype(np.int64)
    size = G.shape[0]
    # P[i, j] = number of members (m, n) with m - lo < i and n - lo < j
    P = np.zeros((size + 1, size + 1), dtype=np.int64)
    P[1:, 1:] = G.cumsum(0).cumsum(1)

    def rect(m0, m1, n0, n1):
        # members with m0 <= m < m1 and n0 <= n < n1 (offsets), empty ranges give 0
        m1 = np.maximum(m1, m0)
        n1 = np.maximum(n1, n0)
        return P[m1, n1] - P[m0, n1] - P[m1, n0] + P[m0, n0]

    xs = np.arange(w.lo, w.hi + 1) - lo
    a = xs[:, None] * np.ones_like(xs)[None, :]
    b = np.ones_like(xs)[:, None] * xs[None, :]
    zero = np.zeros_like(a)
    full = np.full_like(a, size)
    # witness on the left: m < a < n < b
    left = rect(zero, a, a + 1, b)
    # witness on the right: a < m < b < n
    right = rect(a + 1, b, b + 1, full)
    return left + right


def brute_ort_window(r: ArcRegion, w: Window, margin: int, override: bool = False) -> list[Arc]:
    """Arcs inside ``w`` crossed by no arc of ``r`` lying in ``w`` widened by ``margin``."""
    need = required_margin(r, w)
    if margin < need and not override:
        raise ValueError(f"margin {margin} is below the guaranteed bound {need}")
    X = _crossed_matrix(r, w, margin)
    out = []
    for i, j in np.argwhere(X == 0):
        if j - i >= 2:
            out.append(Arc(int(i) + w.lo, int(j) + w.lo))
    return out


def brute_condition_i_window(r: ArcRegion, w: Window) -> Verdict:
    """Check every crossing pair inside ``w`` by plain enumeration."""
    members = [a for a in w.arcs() if a in r]
    for x in members:
        for y in members:
            if not (x.m < y.m < x.n < y.n):
                continue
            for p, q in ((x.m, y.m), (y.m, x.n), (x.n, y.n), (x.m, y.n)):
                if q - p >= 2 and Arc(p, q) not in r:
                    return Verdict("fails", (x, y), Arc(p, q))
    return Verdict("holds")


@dataclass(frozen=True)
class Census:
    left_count: int
    right_count: int


def fountain_census(r: ArcRegion, e: int, w: Window) -> Census:
    """Count arcs ``(m, e)`` with ``m >= w.lo`` and arcs ``(e, n)`` with ``n <= w.hi``."""
    left = sum(1 for m in range(w.lo, e - 1) if (m, e) in r)
    right = sum(1 for n in range(e + 2, w.hi + 1) if (e, n) in r)
    return Census(left, right)


# generators


def random_explicit_set(seed: int, max_arcs: int, coord_bound: int) -> ArcRegion:
    rng = random.Random(seed)
    count = rng.randint(0, max_arcs) if max_arcs > 0 else 0
    arcs = set()
    for _ in range(count):
        m = rng.randint(-coord_bound, coord_bound - 2)
        n = rng.randint(m + 2, coord_bound)
        arcs.add(Arc(m, n))
    return ArcRegion.from_arcs(arcs)


def _interval(rng: random.Random, bound: int) -> IntInterval:
    x, y = sorted((rng.randint(-bound, bound), rng.randint(-bound, bound)))
    lo = -INF if rng.random() < UNBOUNDED_BIAS else x
    hi = INF if rng.random() < UNBOUNDED_BIAS else y
    return IntInterval(lo, hi)


def random_trapezoid(rng: random.Random, const_bound: int) -> Trapezoid:
    mi = _interval(rng, const_bound)
    ni = _interval(rng, const_bound)
    if rng.random() < 0.5:
        return Trapezoid(mi, ni)
    dlo = rng.randint(2, max(2, const_bound))
    dhi = INF if rng.random() < UNBOUNDED_BIAS else rng.randint(dlo, max(dlo, const_bound))
    return Trapezoid(mi, ni, dlo, dhi)


def random_region(seed: int, max_parts: int, const_bound: int) -> ArcRegion:
    rng = random.Random(seed)
    count = rng.randint(1, max_parts) if max_parts > 0 else 0
    return ArcRegion.from_trapezoids(random_trapezoid(rng, const_bound) for _ in range(count))


# differential driver


@dataclass
class SuiteResult:
    passed: int = 0
    failed: int = 0


@dataclass
class OracleSummary:
    cases: int
    suites: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.suites.values())

    def to_document(self) -> dict:
        doc = {"cases": self.cases}
        for name, s in self.suites.items():
            doc[f"{name}.passed"] = s.passed
            doc[f"{name}.failed"] = s.failed
        doc["failures"] = self.failures
        for i, c in enumerate(self.counterexamples):
            doc[f"counterexample.{i}"] = c
        return doc


def _ort_disagreement(r: ArcRegion, w: Window, margin: int, ort_fn) -> Optional[Arc]:
    margin = max(margin, required_margin(r, w))
    want = set(brute_ort_window(r, w, margin))
    got = ort_fn(r)
    for a in w.arcs():
        if (a in got) != (a in want):
            return a
    return None


def minimize_region(r: ArcRegion, still_fails: Callable[[ArcRegion], bool]) -> ArcRegion:
    """Shrink ``r`` by dropping parts and collapsing parts to single arcs while ``still_fails`` holds."""
    parts = list(r.parts)
    progress = True
    while progress:
        progress = False
        for i in range(len(parts)):
            trial = parts[:i] + parts[i + 1 :]
            if still_fails(ArcRegion.from_trapezoids(trial)):
                parts = trial
                progress = True
                break
            a = parts[i].sample()
            if not parts[i].is_finite() or len(list(parts[i].arcs())) > 1:
                point = Trapezoid(IntInterval.point(a.m), IntInterval.point(a.n))
                trial = parts[:i] + [point] + parts[i + 1 :]
                if still_fails(ArcRegion.from_trapezoids(trial)):
                    parts = trial
                    progress = True
                    break
    return ArcRegion.from_trapezoids(parts)


def _fountain_evidence(r: ArcRegion, e: int) -> tuple[bool, bool]:
    # past the constants a column is either empty or full, so a count that
    # still grows between two far windows means infinitely many arcs
    reach = r.max_constant() + abs(e) + 4
    near = fountain_census(r, e, Window(-reach, reach))
    far = fountain_census(r, e, Window(-reach - 5, reach + 5))
    return far.left_count > near.left_count, far.right_count > near.right_count


def agreement_report(config: OracleConfig, ort_fn=ort) -> OracleSummary:
    """Run the ort, condition and fountain differential suites."""
    summary = OracleSummary(cases=config.cases)
    if config.cases == 0:
        return summary
    rng = random.Random(config.seed)
    seeds = [rng.getrandbits(32) for _ in range(config.cases)]
    w = config.window

    suite = summary.suites.setdefault("ort", SuiteResult())
    for s in seeds:
        r = random_region(s, 6, 8)
        bad = _ort_disagreement(r, w, config.margin, ort_fn)
        if bad is None:
            suite.passed += 1
            continue
        suite.failed += 1
        small = minimize_region(r, lambda q: _ort_disagreement(q, w, config.margin, ort_fn) is not None)
        arc = _ort_disagreement(small, w, config.margin, ort_fn)
        summary.counterexamples.append(f"ort: region {format_region(small)} arc {arc}")

    suite = summary.suites.setdefault("conditions", SuiteResult())
    for s in seeds:
        r = random_explicit_set(s, 12, 10)
        direct = check_condition_i(r, "exact").ok and check_condition_ii(r).ok
        enumerated = brute_condition_i_window(r, Window(-10, 10)).ok
        if direct == is_ort_closed(r) == enumerated:
            suite.passed += 1
        else:
            suite.failed += 1
            summary.counterexamples.append(f"conditions: region {format_region(r)}")

    suite = summary.suites.setdefault("fountains", SuiteResult())
    for s in seeds:
        r = random_region(s, 6, 8)
        prof = fountains(r)
        bound = r.max_constant() + 2
        ok = True
        for e in range(-bound, bound + 1):
            left, right = _fountain_evidence(r, e)
            if left != (e in prof.left) or right != (e in prof.right):
                ok = False
                summary.counterexamples.append(f"fountains: region {format_region(r)} endpoint {e}")
                break
        if ok:
            suite.passed += 1
        else:
            suite.failed += 1
    return summary


def crossing_witnesses(r: ArcRegion, d: Arc, w: Window) -> list[Arc]:
    """Arcs of ``r`` inside ``w`` that cross ``d``; used for diagnostics."""
    return [a for a in r.enumerate_window(w) if cross(a, d)]
