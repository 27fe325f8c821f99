import pytest
from hypothesis import given

from arctorsion.dsl import DslSemanticError, DslSyntaxError, format_region, parse_region
from arctorsion.intervals import INF, IntInterval
from arctorsion.region import ArcRegion, Trapezoid, box, from_arcs, leftray, lower, rightray, upper

from .conftest import regions


def test_sugar_expansions():
    assert parse_region("lower(3)") == box(IntInterval(), IntInterval(-INF, 3))
    assert parse_region("upper(-2)") == box(IntInterval(-2, INF), IntInterval())
    assert parse_region("leftray(0,-2)") == box(IntInterval(-INF, -2), IntInterval(0, 0))
    assert parse_region("rightray(5,9)") == box(IntInterval(5, 5), IntInterval(9, INF))
    assert parse_region("arcs{(0,2),(1,3)} | rightray(5,9)") == from_arcs([(0, 2), (1, 3)]) | rightray(5, 9)


def test_open_and_closed_brackets():
    assert parse_region("box((0,4),[2,+inf))") == box(IntInterval(1, 3), IntInterval(2, INF))
    assert parse_region("box([0,0],[0,9],diag[3,4])") == from_arcs([(0, 3), (0, 4)])


def test_compound_terms():
    assert parse_region("shift(1, lower(3))") == lower(2)
    assert parse_region("not(not(lower(0)))") == lower(0)
    assert parse_region(" ( all ) ") == ArcRegion.all()
    assert parse_region("\n empty\t") == ArcRegion.empty()
    assert parse_region("arcs{}") == ArcRegion.empty()


def test_invalid_arc_is_semantic_error():
    with pytest.raises(DslSemanticError) as err:
        parse_region("arcs{(0,1)}")
    assert (err.value.line, err.value.col) == (1, 6)


def test_inverted_range_is_semantic_error():
    with pytest.raises(DslSemanticError):
        parse_region("box([3,1],[0,5])")


def test_syntax_error_reports_position_and_expectation():
    with pytest.raises(DslSyntaxError) as err:
        parse_region("lower(3) |\n  upper(x)")
    assert (err.value.line, err.value.col) == (2, 9)
    assert "INT" in err.value.expected
    with pytest.raises(DslSyntaxError):
        parse_region("lower(3) upper(2)")
    with pytest.raises(DslSyntaxError):
        parse_region("$")


def test_printing_prefers_sugar():
    assert format_region(lower(3)) == "lower(3)"
    assert format_region(upper(0)) == "upper(0)"
    assert format_region(leftray(0, -2)) == "leftray(0,-2)"
    assert format_region(rightray(3, 5)) == "rightray(3,5)"
    assert format_region(ArcRegion.all()) == "all"
    assert format_region(ArcRegion.empty()) == "empty"
    assert format_region(from_arcs([(1, 3), (0, 2), (0, 3)])) == "arcs{(0,2),(0,3),(1,3)}"
    t = Trapezoid(IntInterval(0, INF), IntInterval(), 3, 5)
    assert format_region(ArcRegion.from_trapezoids([t])) == "box([0,+inf),[3,+inf),diag[3,5])"


@given(regions)
def test_print_parse_round_trip(r):
    assert parse_region(format_region(r)) == r
