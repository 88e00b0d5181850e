from __future__ import annotations

from fractions import Fraction

import pytest

from mysticum.errors import DegenerateConicDual, DegenerateMeet, NotOnConic, UnderdeterminedConic
from mysticum.geometry.projective import (
    UNIT_CIRCLE,
    Collineation,
    Conic,
    HLine,
    HPoint,
    coconic,
    collinear,
    conic_point,
    conic_through,
    curves_through,
    dualize,
    join,
    meet,
    param_point,
    parameter_of,
    tangent_at,
)


def test_points_and_lines_are_canonical() -> None:
    assert HPoint.of(2, 4, -2) == HPoint.of(-1, -2, 1)
    assert HLine.of(0, Fraction(1, 2), Fraction(-1, 3)) == HLine.of(0, 3, -2)


def test_join_and_meet() -> None:
    p, q = HPoint.of(0, 0, 1), HPoint.of(1, 1, 1)
    line = join(p, q)
    assert line.contains(p) and line.contains(q)
    x_axis = HLine.of(0, 1, 0)
    assert meet(line, x_axis) == p
    with pytest.raises(DegenerateMeet):
        meet(line, line)


def test_param_points_lie_on_circle() -> None:
    for t in (Fraction(0), Fraction(1), Fraction(-5, 3), None):
        p = param_point(t)
        assert UNIT_CIRCLE.contains(p)
        assert parameter_of(p) == t
    with pytest.raises(NotOnConic):
        parameter_of(HPoint.of(1, 1, 1))


def test_conic_point_reproduces_param_point() -> None:
    anchor = param_point(None)
    for t in (Fraction(2), Fraction(-1, 4)):
        assert conic_point(UNIT_CIRCLE, anchor, t) == param_point(t)


def test_conic_through_five_circle_points() -> None:
    points = [param_point(Fraction(t)) for t in (0, 1, 2, -1, 3)]
    assert conic_through(points) == UNIT_CIRCLE
    assert coconic(points + [param_point(Fraction(7, 2))])
    assert not coconic(points + [HPoint.of(5, 1, 1)])
    with pytest.raises(UnderdeterminedConic):
        conic_through(points[:4])
    assert len(curves_through(points[:4], 2)) == 2


def test_tangent_meets_circle_once() -> None:
    p = param_point(Fraction(1, 3))
    tangent = tangent_at(UNIT_CIRCLE, p)
    assert tangent.contains(p)
    # the tangent line carries no second circle point
    for t in (Fraction(0), Fraction(1), Fraction(-2)):
        assert not tangent.contains(param_point(t))


def test_duality() -> None:
    p = HPoint.of(1, 2, 3)
    assert dualize(p) == HLine.of(1, 2, 3)
    assert dualize(dualize(p)) == p
    assert dualize(UNIT_CIRCLE) == UNIT_CIRCLE
    # tangent at parameter t dualizes to the circle point at -1/t
    t = Fraction(2, 5)
    assert dualize(tangent_at(UNIT_CIRCLE, param_point(t))) == param_point(-1 / t)
    pair_of_lines = Conic.from_coeffs((1, 0, 0, -1, 0, 0))
    with pytest.raises(DegenerateConicDual):
        dualize(pair_of_lines)


def test_collineation_preserves_incidence() -> None:
    t = Collineation(((1, 2, 0), (0, 1, 3), (1, 0, 1)))
    points = [param_point(Fraction(v)) for v in (0, 1, 2, -1, 3)]
    image = t.conic(UNIT_CIRCLE)
    assert all(image.contains(t.point(p)) for p in points)
    line = join(points[0], points[1])
    assert t.line(line).contains(t.point(points[0]))
    assert collinear([t.point(HPoint.of(0, 0, 1)), t.point(HPoint.of(1, 0, 1)), t.point(HPoint.of(2, 0, 1))])
    with pytest.raises(ValueError):
        Collineation(((1, 0, 0), (0, 1, 0), (1, 1, 0)))
