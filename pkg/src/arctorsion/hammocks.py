"""Hom-hammocks: the regions of sources and targets of nonzero morphisms."""

from __future__ import annotations

from .arcs import Arc
from .intervals import INF, IntInterval
from .region import ArcRegion, Trapezoid


def hammock_from(x: Arc) -> ArcRegion:
    """All arcs ``a`` with a nonzero morphism ``a -> x``."""
    m, n = x
    return ArcRegion.from_trapezoids(
        [
            Trapezoid(IntInterval(-INF, m), IntInterval(m + 2, n)),
            Trapezoid(IntInterval(m + 2, n), IntInterval(n + 2, INF)),
        ]
    )


def hammock_to(x: Arc) -> ArcRegion:
    """All arcs ``y`` with a nonzero morphism ``x -> y``."""
    m, n = x
    return ArcRegion.from_trapezoids(
        [
            Trapezoid(IntInterval(m, n - 2), IntInterval(n, INF)),
            Trapezoid(IntInterval(-INF, m - 2), IntInterval(m, n - 2)),
        ]
    )
