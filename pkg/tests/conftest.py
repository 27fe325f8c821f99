from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arctorsion.arcs import Arc, Window
from arctorsion.classify import is_precovering
from arctorsion.oracle import random_explicit_set, random_region
from arctorsion.ort import closure

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
regions = seeds.map(lambda s: random_region(s, 6, 8))
small_regions = seeds.map(lambda s: random_region(s, 3, 5))
explicit_sets = seeds.map(lambda s: random_explicit_set(s, 12, 10))


@st.composite
def arcs_within(draw, lo=-10, hi=10):
    m = draw(st.integers(lo, hi - 2))
    n = draw(st.integers(m + 2, hi))
    return Arc(m, n)


def torsion_corpus(count: int, start: int = 0) -> list:
    """Closures of random regions that also satisfy the fountain condition."""
    out = []
    seed = start
    while len(out) < count:
        c = closure(random_region(seed, 6, 8))
        if is_precovering(c):
            out.append(c)
        seed += 1
    return out


def pointwise(r, w: Window) -> set:
    return {a for a in w.arcs() if a in r}


@pytest.fixture(scope="session")
def corpus():
    return torsion_corpus(120)
