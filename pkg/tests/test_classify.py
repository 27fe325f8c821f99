import random

import pytest
from hypothesis import given, settings

from arctorsion.arcs import Arc, Window, hom_nonzero
from arctorsion.classify import (
    AisleType,
    Kind,
    check_condition_i,
    check_condition_ii,
    classify,
    classify_co_t_structure,
    classify_t_structure,
    is_ort_closed,
    is_precovering,
    is_preenveloping,
    is_torsion_class,
    left_perp,
    preenvelope_construct,
    precover_construct,
    right_perp,
)
from arctorsion.dsl import parse_region
from arctorsion.errors import PreconditionError
from arctorsion.ort import closure, fountains, ort
from arctorsion.region import ArcRegion, from_arcs, leftray, lower, rightray, upper

from .conftest import explicit_sets, regions, seeds

ALL = ArcRegion.all()
EMPTY = ArcRegion.empty()
W = Window(-9, 9)


def test_condition_i_examples():
    v = check_condition_i(from_arcs([(0, 2), (1, 3)]))
    assert v.status == "fails"
    assert v.pair == (Arc(0, 2), Arc(1, 3)) and v.missing == Arc(0, 3)
    assert check_condition_i(from_arcs([(0, 2), (1, 3), (0, 3)])).status == "holds"
    assert check_condition_i(from_arcs([(0, 2), (4, 6)])).status == "holds"


def test_condition_i_exact_mode_needs_finite_region():
    with pytest.raises(PreconditionError):
        check_condition_i(lower(0), "exact")
    v = check_condition_i(lower(0), "window")
    assert v.status == "window-approximate" and v.window == Window(-10, 10)


def test_condition_i_window_mode_finds_violations():
    r = leftray(2, -3) | from_arcs([(1, 4)])
    v = check_condition_i(r, "window")
    assert v.status == "fails"
    assert v.pair[1] == Arc(1, 4) and v.missing not in r


def test_condition_ii_examples():
    r = leftray(0, -2) | rightray(3, 5)
    v = check_condition_ii(r)
    assert v.status == "fails" and v.missing == Arc(0, 3)
    assert check_condition_ii(r | from_arcs([(0, 3)])).status == "holds"
    assert check_condition_ii(from_arcs([(0, 2), (1, 5), (3, 9)])).status == "holds"


def test_predicate_examples():
    assert not is_ort_closed(from_arcs([(0, 2), (1, 3)]))
    assert is_ort_closed(lower(0)) and is_ort_closed(upper(0))
    assert is_precovering(lower(0)) and not is_precovering(upper(0)) and is_precovering(ALL)
    assert is_preenveloping(upper(0)) and not is_preenveloping(lower(0))
    assert is_preenveloping(from_arcs([(0, 2), (3, 7)]))
    assert is_torsion_class(lower(3))
    assert not is_torsion_class(upper(0))
    assert not is_torsion_class(from_arcs([(0, 2), (1, 3)]))


def test_perp_examples():
    assert right_perp(lower(0)) == upper(-1)
    assert right_perp(ALL) == EMPTY
    assert right_perp(EMPTY) == ALL
    assert left_perp(upper(-1)) == lower(0)
    assert left_perp(EMPTY) == ALL
    r = from_arcs([(0, 2), (1, 3)])
    assert left_perp(right_perp(r)) == from_arcs([(0, 2), (1, 3), (0, 3)])


def test_t_structure_examples():
    assert classify_t_structure(lower(3)) == AisleType(Kind.HALF_LINE, 3)
    assert str(classify_t_structure(lower(3))) == "HalfLine(3)"
    assert classify_t_structure(ALL).kind is Kind.ALL
    assert classify_t_structure(EMPTY).kind is Kind.ZERO
    assert classify_t_structure(upper(0)).kind is Kind.NOT


def test_co_t_structure_examples():
    assert classify_co_t_structure(ALL).kind is Kind.ALL
    assert classify_co_t_structure(EMPTY).kind is Kind.ZERO
    assert classify_co_t_structure(lower(3)).kind is Kind.NOT


def test_precover_examples():
    assert precover_construct(lower(3), Arc(0, 5)) == [Arc(0, 2), Arc(0, 3)]
    assert precover_construct(ALL, Arc(0, 3)) == [Arc(0, 2), Arc(0, 3)]
    with pytest.raises(PreconditionError, match="not precovering: right fountain 0 is not a left fountain"):
        precover_construct(upper(0), Arc(0, 5))


def test_preenvelope_examples():
    assert preenvelope_construct(upper(-3), Arc(-5, 0)) == [Arc(-3, 0), Arc(-2, 0)]
    with pytest.raises(PreconditionError, match="not preenveloping: left fountain"):
        preenvelope_construct(lower(0), Arc(-2, 3))
    mirrored = sorted(Arc(-a.n, -a.m) for a in precover_construct(ALL, Arc(-3, 0)))
    assert preenvelope_construct(ALL, Arc(0, 3)) == mirrored


def test_precover_reaches_forward_arcs_past_the_fountain_line():
    # forward arcs with left end beyond the chosen fountain line are kept explicitly
    r = lower(0) | from_arcs([(2, 10)])
    comps = precover_construct(r, Arc(-2, 3))
    assert Arc(2, 10) in comps
    assert all(hom_nonzero(c, Arc(-2, 3)) for c in comps)


def test_report_fields():
    doc = classify(lower(3)).to_document()
    assert list(doc) == [
        "fountains.left", "fountains.right", "locally_finite", "condition_i", "condition_ii",
        "ort_closed", "precovering", "preenveloping", "torsion_class", "t_structure",
        "co_t_structure", "canonical_parts",
    ]


@given(regions)
def test_report_invariants(r):
    rep = classify(r)
    assert rep.torsion_class == (rep.ort_closed and rep.precovering)
    if rep.t_structure.kind is not Kind.NOT:
        assert rep.torsion_class


@given(regions)
def test_torsion_class_criterion(r):
    prof = fountains(r)
    direct = (
        check_condition_i(r, "window").ok
        and check_condition_ii(r).ok
        and prof.right <= prof.left
    )
    assert is_torsion_class(r) == direct


@settings(max_examples=150)
@given(explicit_sets)
def test_finite_sets_conditions_match_closedness(r):
    assert check_condition_i(r, "exact").ok == is_ort_closed(r)


@given(regions)
def test_closed_regions_satisfy_both_conditions(r):
    c = closure(r)
    assert check_condition_i(c, "window").ok
    assert check_condition_ii(c).ok


@given(regions)
def test_double_perp_is_closure(r):
    assert left_perp(right_perp(r)) == closure(r)


def _degree_finite(r, a, prof):
    return a not in prof.left and a not in prof.right


@given(regions)
def test_longest_arcs_at_an_endpoint_give_ort_members(r):
    r = closure(r)
    prof = fountains(r)
    o = ort(r)
    for a in range(-8, 9):
        if not _degree_finite(r, a, prof):
            continue
        lefts, rights = r.lefts(a), r.rights(a)
        if lefts and rights:
            assert Arc(int(lefts.min()), int(rights.max())) in o
        elif lefts:
            assert Arc(int(lefts.min()), a + 1) in o
        elif rights:
            assert Arc(a - 1, int(rights.max())) in o


def _condition_i_regions(seed):
    # rays on both sides with a gap, plus random short arcs: condition (i)
    # often holds while condition (ii) fails, so the closure is strictly bigger
    rng = random.Random(seed)
    a = rng.randint(-4, 2)
    b = a + rng.randint(2, 5)
    r = leftray(a, a - rng.randint(2, 5)) | rightray(b, b + rng.randint(2, 5))
    for _ in range(rng.randint(0, 3)):
        m = rng.randint(-6, 6)
        r = r | from_arcs([(m, m + rng.randint(2, 4))])
    return r


@given(seeds)
def test_closure_members_are_anchored(seed):
    r = _condition_i_regions(seed)
    if not check_condition_i(r, "window").ok:
        return
    prof = fountains(r)
    for x in closure(r).enumerate_window(W):
        a, b = x
        if _degree_finite(r, a, prof):
            assert r.rights(a) and r.rights(a).max() >= b
        if _degree_finite(r, b, prof):
            assert r.lefts(b) and r.lefts(b).min() <= a
        if (b in prof.left or b in prof.right) and _degree_finite(r, a, prof):
            assert x in r
        if (a in prof.left or a in prof.right) and _degree_finite(r, b, prof):
            assert x in r


@given(regions)
def test_fountain_pairs_are_members(r):
    r = closure(r)
    prof = fountains(r)
    span = range(-10, 11)
    for a in span:
        for b in span:
            if b - a < 2:
                continue
            if (a in prof.right and b in prof.right) or (a in prof.left and b in prof.left):
                assert Arc(a, b) in r
            if a in prof.right and b in prof.left:
                assert Arc(a, b) in r


def test_condition_i_family_has_strict_closures():
    strict = 0
    for seed in range(40):
        r = _condition_i_regions(seed)
        if check_condition_i(r, "window").ok and not is_ort_closed(r):
            strict += 1
    assert strict > 5


@given(regions)
def test_torsion_orthogonality(r):
    x = closure(r)
    y = right_perp(x)
    xs, ys = x.enumerate_window(W), y.enumerate_window(W)
    assert not any(hom_nonzero(a, b) for a in xs for b in ys)


def _coverage_ok(r, x, comps, window):
    lines = {c.n for c in comps}
    for a in r.enumerate_window(window):
        if not hom_nonzero(a, x):
            continue
        hit = [b for b in comps if hom_nonzero(a, b) and hom_nonzero(b, x)]
        if not hit:
            return False
        if not any(b.n == a.n or b.n in lines for b in hit):
            return False
    return True


@given(regions, seeds)
def test_precover_components_cover_window_sources(r, seed):
    r = closure(r)
    if not is_precovering(r):
        return
    rng = random.Random(seed)
    m = rng.randint(-6, 4)
    x = Arc(m, m + rng.randint(2, 6))
    comps = precover_construct(r, x)
    assert all(hom_nonzero(c, x) for c in comps)
    assert _coverage_ok(r, x, comps, Window(-14, 14))


@given(regions, seeds)
def test_preenvelope_is_mirrored_precover(r, seed):
    r = closure(r)
    if not is_preenveloping(r):
        with pytest.raises(PreconditionError):
            preenvelope_construct(r, Arc(0, 3))
        return
    rng = random.Random(seed)
    m = rng.randint(-6, 4)
    x = Arc(m, m + rng.randint(2, 6))
    comps = preenvelope_construct(r, x)
    assert all(hom_nonzero(x, c) for c in comps)


def test_golden_reports():
    assert classify(parse_region("lower(3)")).to_document() == {
        "fountains.left": "(-inf,3]",
        "fountains.right": "empty",
        "locally_finite": False,
        "condition_i": "window-approximate -11..11",
        "condition_ii": "holds",
        "ort_closed": True,
        "precovering": True,
        "preenveloping": False,
        "torsion_class": True,
        "t_structure": "HalfLine(3)",
        "co_t_structure": "Not",
        "canonical_parts": 1,
    }
