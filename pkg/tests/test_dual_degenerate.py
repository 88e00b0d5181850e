from __future__ import annotations

from fractions import Fraction

import pytest

from mysticum.errors import EmptySpace, PreconditionError
from mysticum.geometry.projective import UNIT_CIRCLE, HLine, dualize, param_point, tangent_at
from mysticum.models import Scene
from mysticum.scenes import generate
from mysticum.theorems.dual_degenerate import (
    DEGENERATE_SIZES,
    TangentScene,
    pascal_limit_agreement,
    quadrilateral_points,
    tangency_constrained_curve,
    tangential_triangle,
    verify_degenerate,
    verify_degenerates,
    verify_dual,
    verify_duals,
)


def _circle(*params: int | Fraction, kind: str = "ngon") -> Scene:
    labels = "ABCDEFGHIJ"[: len(params)]
    return Scene.on_circle({x: Fraction(t) for x, t in zip(labels, params)}, kind=kind)


def test_tangent_scene_dual_points() -> None:
    t = TangentScene(_circle(0, 1, 3, -2, Fraction(1, 2), -5, kind="tangent-hex"))
    dual = t.dual_scene()
    assert dual.conic == UNIT_CIRCLE
    assert dual.kind == "hex"
    for x, point in dual.points.items():
        assert point == dualize(t.sides[x])
        assert point == param_point(dual.params[x])
    assert len(t.vertices) == 6


def test_tangent_scene_rejects_repeated_points() -> None:
    with pytest.raises(PreconditionError):
        TangentScene(_circle(0, 1, 1, 2))


def test_tangent_hexagon_duals() -> None:
    scene = generate("tangent-hex", 3)
    results = verify_duals(scene)
    assert [r.statement for r in results] == ["prop6_1", "thm6_2"]
    assert all(r.passed for r in results), [r.to_dict() for r in results]


@pytest.mark.parametrize("statement", ["thm6_3", "thm6_4", "thm6_5", "thm6_6"])
def test_tangent_octagon_duals(statement: str) -> None:
    scene = generate("tangent-oct", 2)
    result = verify_dual(statement, TangentScene(scene))
    assert result.passed, result.to_dict()


def test_octagon_statement_on_hexagon_is_rejected() -> None:
    with pytest.raises(PreconditionError):
        verify_dual("thm6_4", TangentScene(generate("tangent-hex", 3)))
    with pytest.raises(ValueError):
        verify_dual("thm6_9", TangentScene(generate("tangent-hex", 3)))


def test_tangency_space_dimensions(pentagon: Scene) -> None:
    a, *rest = pentagon.points.values()
    tangent = tangent_at(pentagon.conic, a)
    cubics = tangency_constrained_curve(rest, [(a, tangent)], 3)
    assert len(cubics) == 4
    (conic,) = tangency_constrained_curve(rest, [(a, tangent)], 2)
    assert conic.is_proportional(UNIT_CIRCLE.form)
    for form in cubics:
        assert form(a.coords) == 0


def test_tangency_preconditions(pentagon: Scene) -> None:
    a, b, c, *_ = pentagon.points.values()
    with pytest.raises(PreconditionError):
        tangency_constrained_curve([], [(a, tangent_at(pentagon.conic, b))], 2)
    with pytest.raises(EmptySpace):
        tangency_constrained_curve([a, b, c], [], 1)


def test_residual_line_with_a_doubled_vertex(pentagon: Scene) -> None:
    result = verify_degenerate("prop7_1", pentagon)
    assert result.passed, result.to_dict()
    assert result.detail["space_dimension"] == 4


def test_residual_conic_with_a_doubled_vertex() -> None:
    result = verify_degenerate("prop7_2", _circle(0, 1, 3, -2, Fraction(1, 2), -5, Fraction(2, 3)))
    assert result.passed, result.to_dict()
    assert result.detail["space_dimension"] == 7


def test_inscribed_quadrilateral() -> None:
    scene = _circle(0, 1, 3, -2)
    points = quadrilateral_points(scene)
    assert set(points) == {"M", "N", "P", "Q"}
    assert verify_degenerate("prop7_3", scene).passed


def test_tangential_triangle_cevians() -> None:
    scene = _circle(0, 2, -1)
    assert set(tangential_triangle(scene)) == {"AQ", "BR", "CP"}
    assert verify_degenerate("prop7_4", scene).passed


def test_pappus() -> None:
    scene = generate("pappus", 2)
    (result,) = verify_degenerates(scene)
    assert result.statement == "pappus"
    assert result.passed


def test_limit_approaches_tangent_line(pentagon: Scene) -> None:
    agreement = pascal_limit_agreement(pentagon)
    assert agreement.monotone
    assert len(agreement.lines) == 3
    assert isinstance(agreement.limit_line, HLine)


def test_degenerate_all_picks_by_size(pentagon: Scene) -> None:
    names = [r.statement for r in verify_degenerates(pentagon)]
    assert names == ["prop7_1", "limit"]
    assert DEGENERATE_SIZES["prop7_2"] == 7
    with pytest.raises(PreconditionError):
        verify_degenerates(_circle(0, 1, 3, -2, 5, 7))
    with pytest.raises(PreconditionError):
        verify_degenerate("prop7_3", pentagon)
