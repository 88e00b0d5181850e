from __future__ import annotations

from fractions import Fraction

import pytest

from mysticum.algebra.poly import HomoPoly, poly_mul, poly_product
from mysticum.errors import (
    AmbiguousIntersection,
    DependentCurves,
    PreconditionError,
    SharedComponent,
)
from mysticum.geometry.decomposition import (
    common_member,
    curve_rank,
    in_pencil,
    pencil_of,
    residual_curve,
    shares_component,
)
from mysticum.geometry.projective import UNIT_CIRCLE, Conic, join, meet, param_point, tangent_at

PARAMS = [Fraction(0), Fraction(1), Fraction(3), Fraction(-2), Fraction(1, 2), Fraction(-5, 3)]


def _hexagon_cubics() -> tuple[HomoPoly, HomoPoly, list]:  # type: ignore[type-arg]
    a, b, c, d, e, f = (param_point(t) for t in PARAMS)
    d1 = poly_product([join(a, b).form, join(c, d).form, join(e, f).form])
    d2 = poly_product([join(b, c).form, join(d, e).form, join(f, a).form])
    return d1, d2, [a, b, c, d, e, f]


def test_residual_line_is_pascal_line() -> None:
    d1, d2, pts = _hexagon_cubics()
    cert = residual_curve(d1, d2, UNIT_CIRCLE, pts)
    assert cert.verify()
    assert cert.degree == 1
    a, b, c, d, e, f = pts
    meets = [
        meet(join(a, b), join(d, e)),
        meet(join(b, c), join(e, f)),
        meet(join(c, d), join(f, a)),
    ]
    line = cert.line()
    assert all(line.contains(p) for p in meets)


def test_certificate_to_dict_is_text() -> None:
    d1, d2, pts = _hexagon_cubics()
    data = residual_curve(d1, d2, UNIT_CIRCLE, pts).to_dict()
    assert set(data) == {"lambda", "mu", "residual", "divisor", "aux_parameter"}
    assert all(isinstance(v, str) for v in data["residual"])


def test_tampered_certificate_fails_verification() -> None:
    d1, d2, pts = _hexagon_cubics()
    cert = residual_curve(d1, d2, UNIT_CIRCLE, pts)
    from dataclasses import replace

    assert not replace(cert, lam=cert.lam + 1).verify()


def test_preconditions() -> None:
    d1, d2, pts = _hexagon_cubics()
    with pytest.raises(DependentCurves):
        residual_curve(d1, d1.scale(3), UNIT_CIRCLE, pts)
    shared = poly_mul(join(pts[0], pts[1]).form, UNIT_CIRCLE.form)
    with pytest.raises(SharedComponent):
        residual_curve(d1, shared, UNIT_CIRCLE, pts)
    with pytest.raises(PreconditionError):
        residual_curve(UNIT_CIRCLE.form, UNIT_CIRCLE.form, UNIT_CIRCLE, pts)
    with pytest.raises(PreconditionError):
        residual_curve(d1, d2, Conic.from_coeffs((1, 0, 0, -1, 0, 0)), pts)


def test_base_points_must_count_2d() -> None:
    d1, d2, pts = _hexagon_cubics()
    with pytest.raises(PreconditionError):
        residual_curve(d1, d2, UNIT_CIRCLE, pts[:5])
    with pytest.raises(PreconditionError):
        residual_curve(d1, d2, UNIT_CIRCLE, pts, doubled=1)


def test_doubled_vertex_counts_twice() -> None:
    a, b, c, d, e = (param_point(t) for t in PARAMS[:5])
    d1 = poly_product([tangent_at(UNIT_CIRCLE, a).form, join(b, c).form, join(d, e).form])
    d2 = poly_product([join(a, b).form, join(c, d).form, join(e, a).form])
    cert = residual_curve(d1, d2, UNIT_CIRCLE, [a, b, c, d, e], doubled=1)
    assert cert.verify()
    assert cert.degree == 1


def test_shares_component() -> None:
    x = HomoPoly.linear(1, 0, 0)
    y = HomoPoly.linear(0, 1, 0)
    z = HomoPoly.linear(0, 0, 1)
    assert shares_component(poly_mul(x, y), poly_mul(x, z))
    assert not shares_component(poly_mul(x, y), UNIT_CIRCLE.form)


def test_pencil_membership_and_common_member() -> None:
    x2 = HomoPoly.from_coeffs(2, [1, 0, 0, 0, 0, 0])
    y2 = HomoPoly.from_coeffs(2, [0, 0, 0, 1, 0, 0])
    z2 = HomoPoly.from_coeffs(2, [0, 0, 0, 0, 0, 1])
    circle = UNIT_CIRCLE.form
    p1 = pencil_of(x2, y2)
    p2 = pencil_of(circle, z2)
    assert in_pencil(x2 + y2, p1)
    assert not in_pencil(z2, p1)
    member = common_member([p1, p2])
    assert member is not None and member.is_proportional(x2 + y2)
    assert common_member([p1, pencil_of(z2, HomoPoly.from_coeffs(2, [0, 1, 0, 0, 0, 0]))]) is None
    with pytest.raises(AmbiguousIntersection):
        common_member([p1, pencil_of(y2, x2.scale(2))])
    with pytest.raises(DependentCurves):
        pencil_of(x2, x2.scale(5))
    assert curve_rank([x2, y2, x2 + y2]) == 2
