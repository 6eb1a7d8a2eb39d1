"""Polygon content: shoelace oracle, dissection-equivalence laws, rigid motions."""

from fractions import Fraction

import pytest

import eudoxos as E
from conftest import random_convex_polygon
from eudoxos.ratios import exact_value

PYTHAGOREAN_ROTATIONS = [
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(-4, 5), Fraction(3, 5)),
    (Fraction(8, 17), Fraction(-15, 17)),
]


def test_content_examples():
    assert E.content(E.unit_square()) == 1
    assert E.content(E.Polygon([(0, 0), (1, 0), (0, 1)])) == Fraction(1, 2)
    # shoelace oracle by hand: box 4x3 minus right triangles 6+2+... = 6
    assert E.content(E.Polygon([(0, 0), (4, 0), (1, 3)])) == 6


def test_orientation_normalized():
    cw = E.Polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert E.content(cw) == 1


def test_degenerate_rejected():
    with pytest.raises(E.DegeneratePolygonError):
        E.Polygon([(0, 0), (1, 0)])
    with pytest.raises(E.DegeneratePolygonError):
        E.Polygon([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(E.SelfIntersectionError):
        E.Polygon([(0, 0), (3, 1), (1, 0), (0, 2)])  # crossing edges


def test_irrational_vertex_rejected():
    # the unit-side equilateral triangle needs sqrt(3)/2, which is not rational
    with pytest.raises(E.IrrationalVertexError):
        E.parse_polygon("0,0\n1,0\n1/2,sqrt(3)/2")


def test_rectangle_normal_form():
    assert E.rectangle_normal_form(E.unit_square(), 2) == (2, Fraction(1, 2))
    tri = E.Polygon([(0, 0), (1, 0), (0, 1)])
    assert E.rectangle_normal_form(tri, 1) == (1, Fraction(1, 2))
    hexa = E.Polygon([(0, 0), (4, 0), (1, 3)])
    assert E.rectangle_normal_form(hexa, Fraction(3, 2)) == (Fraction(3, 2), 4)


def test_rho1_examples():
    assert E.rho1_equivalent(E.unit_square(), E.rectangle(2, Fraction(1, 2)))
    assert E.rho1_equivalent(E.unit_square(), E.Polygon([(0, 0), (2, 0), (0, 1)]))
    assert not E.rho1_equivalent(E.unit_square(), E.Polygon([(0, 0), (1, 0), (0, 1)]))


def test_compare_content():
    sq, tri = E.unit_square(), E.Polygon([(0, 0), (1, 0), (0, 1)])
    assert E.compare_content(sq, tri) is E.Comparison.GREATER
    assert E.compare_content(sq, sq) is E.Comparison.EQUAL
    a = E.rectangle(Fraction(2, 3), 1)
    b = E.rectangle(Fraction(3, 4), 1)
    assert E.compare_content(a, b) is E.Comparison.LESS


def test_additivity_on_random_fans(rng):
    for _ in range(40):
        poly = random_convex_polygon(rng)
        parts = E.fan_triangles(poly)
        assert sum(E.content(t) for t in parts) == E.content(poly)


def test_congruence_invariance(rng):
    for _ in range(25):
        poly = random_convex_polygon(rng)
        for rot in PYTHAGOREAN_ROTATIONS:
            moved = E.transform(poly, rotation=rot, translation=(Fraction(7, 3), -2))
            assert E.content(moved) == E.content(poly)


def test_bad_rotation_rejected():
    with pytest.raises(ValueError):
        E.transform(E.unit_square(), rotation=(Fraction(1, 2), Fraction(1, 2)))


def test_rectangle_bridge_ratio():
    # ratio of the rectangle (a, b) to the unit square is the product of a:1 and b:1
    a, b = Fraction(3, 2), Fraction(5, 7)
    rect = E.rectangle(a, b)
    bridge = E.ratio(E.polygon_class(E.content(rect)), E.polygon_class(E.content(E.unit_square())))
    prod = E.mul_ratio(E.rational_ratio(a), E.rational_ratio(b))
    assert E.eq_E(bridge, prod, 60).is_proportional
    assert exact_value(bridge) == a * b


def test_parse_and_format_round_trip():
    poly = E.Polygon([(0, 0), (Fraction(3, 2), 0), (1, Fraction(5, 7))])
    text = E.polygons.format_polygon(poly) if hasattr(E, "polygons") else None
    from eudoxos.polygons import format_polygon, parse_polygon

    assert parse_polygon(format_polygon(poly)).vertices == poly.vertices


def test_polygon_magnitude_kind():
    m = E.polygon_class(E.content(E.unit_square()))
    assert m.kind is E.KindId.POLYGON_CLASSES
    assert E.compare(m, E.polygon_class(Fraction(1, 2))) is E.Comparison.GREATER
