"""Arcs on the integer line, the crossing relation and the shift functors.

An arc ``(m, n)`` with ``n - m >= 2`` is also the coordinate of an
indecomposable object of the cluster category of type A-infinity, so
``hom_nonzero`` lives here as well.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidArc


@dataclass(frozen=True, order=True)
class Arc:
    m: int
    n: int

    def __post_init__(self):
        if self.n - self.m < 2:
            raise InvalidArc(f"({self.m},{self.n}) is not an arc: n - m = {self.n - self.m} < 2")

    def __iter__(self):
        yield self.m
        yield self.n

    def __str__(self) -> str:
        return f"({self.m},{self.n})"

    @property
    def length(self) -> int:
        return self.n - self.m


@dataclass(frozen=True)
class Window:
    """All arcs with ``lo <= m`` and ``n <= hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"window {self.lo}..{self.hi} is inverted")

    def __contains__(self, a: Arc) -> bool:
        return self.lo <= a.m and a.n <= self.hi

    def arcs(self) -> Iterator[Arc]:
        for m in range(self.lo, self.hi - 1):
            for n in range(m + 2, self.hi + 1):
                yield Arc(m, n)

    def widen(self, margin: int) -> "Window":
        return Window(self.lo - margin, self.hi + margin)

    @property
    def span(self) -> int:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


_ARC_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")
_WINDOW_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_arc(text: str) -> Arc:
    match = _ARC_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse arc {text!r}; expected '(m,n)'")
    return Arc(int(match.group(1)), int(match.group(2)))


def parse_window(text: str) -> Window:
    match = _WINDOW_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse window {text!r}; expected 'LO..HI'")
    return Window(int(match.group(1)), int(match.group(2)))


def cross(a: Arc, b: Arc) -> bool:
    return a.m < b.m < a.n < b.n or b.m < a.m < b.n < a.n


def shift_arc(a: Arc, k: int = 1) -> Arc:
    """Apply the k-th power of the suspension: (m, n) -> (m - k, n - k)."""
    return Arc(a.m - k, a.n - k)


def mirror_arc(a: Arc) -> Arc:
    """Reflect about 0: (m, n) -> (-n, -m)."""
    return Arc(-a.n, -a.m)


def hom_nonzero(x: Arc, y: Arc) -> bool:
    """Whether Hom(x, y) is nonzero (it is then one-dimensional).

    Holds exactly when the suspension of x crosses y; this also covers the
    identity, since (m-1, n-1) crosses (m, n).
    """
    return cross(shift_arc(x, 1), y)


def hom_dim(x: Arc, y: Arc) -> int:
    return 1 if hom_nonzero(x, y) else 0
