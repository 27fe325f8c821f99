import pytest

from arctorsion.arcs import Window
from arctorsion.dsl import parse_region
from arctorsion.render import render, render_ascii, render_svg

GOLDEN = (
    "      +-----------+\n"
    "      |           |\n"
    "--+---+---+---+---+---+--\n"
    " -2  -1   0   1   2   3\n"
)


def test_single_arc_figure():
    assert render_ascii(parse_region("arcs{(-1,2)}"), Window(-2, 3)) == GOLDEN


def test_bare_number_line():
    out = render_ascii(parse_region("empty"), Window(0, 4))
    assert out == "-+--+--+--+--+--\n 0  1  2  3  4\n"


def test_fountains_are_marked():
    out = render_ascii(parse_region("lower(0)"), Window(-4, 2))
    lines = out.splitlines()
    assert lines[-1] == "left fountains: (-inf,0]"
    assert sum(line.count(".") > 0 for line in lines) == 5
    assert out == render_ascii(parse_region("lower(0)"), Window(-4, 2))


def test_nested_arcs_stack():
    out = render_ascii(parse_region("arcs{(0,2),(0,4)}"), Window(0, 4))
    assert out.splitlines()[0].count("+") == 2
    assert len(out.splitlines()) == 6


def test_large_window_rejected():
    with pytest.raises(ValueError):
        render_ascii(parse_region("all"), Window(0, 300))


def test_svg_is_self_contained_and_deterministic():
    r = parse_region("arcs{(-1,2)} | rightray(1,3)")
    svg = render_svg(r, Window(-2, 3))
    assert svg.startswith("<svg xmlns=\"http://www.w3.org/2000/svg\"")
    assert svg.rstrip().endswith("</svg>")
    assert "A 60 60 0 0 1 190 100" in svg
    assert "stroke-dasharray" in svg
    assert svg == render(r, Window(-2, 3), "svg")
