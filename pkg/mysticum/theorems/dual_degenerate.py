"""Dual statements for conics inscribed in polygons, and degenerate limits.

Dual statements are checked only through coordinate duality: the tangent scene
is turned into the scene of its dual points on the dual conic, and the matching
point statement runs there. Degenerate statements replace a pair of merging
vertices with a tangency condition, or the base conic with a pair of lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..algebra.linear import RatMatrix, format_rat, nullspace
from ..algebra.poly import HomoPoly, monomials, poly_mul, poly_product
from ..combinatorics import LABELS6, Matching
from ..errors import DegenerateConicDual, EmptySpace, MysticumError, PreconditionError
from ..geometry.decomposition import curve_rank, residual_curve, shares_component
from ..geometry.projective import (
    UNIT_CIRCLE,
    Conic,
    HLine,
    HPoint,
    coconic,
    collinear,
    concurrent,
    conic_through,
    dualize,
    evaluation_matrix,
    join,
    meet,
    param_point,
    tangent_at,
)
from ..models import Scene
from ..scenes import Lcg64
from .base import StatementResult, has_avoided_component, point_dict
from .hexagon import HexScene, prop_3_2_verify, prop_3_5_verify
from .octagon import OctScene, classical_meets, mystic_certificate, side_conics, steiner_conic_data

logger = logging.getLogger(__name__)

DUAL_STATEMENTS = ("prop6_1", "thm6_2", "thm6_3", "thm6_4", "thm6_5", "thm6_6")
DEGENERATE_STATEMENTS = ("prop7_1", "prop7_2", "prop7_3", "prop7_4", "pappus", "limit")

# Point count each degenerate statement needs on the base conic.
DEGENERATE_SIZES = {"prop7_1": 5, "prop7_2": 7, "prop7_3": 4, "prop7_4": 3, "limit": 5, "pappus": 6}

LIMIT_STEPS = (10, 100, 1000)

# The dual hexagon pairs side AB with A, side FA with B, and so on around the hexagon.
DUAL_HEX_RELABEL = {"A": "A", "F": "B", "B": "C", "C": "D", "D": "E", "E": "F"}


# === Tangent scenes ===


@dataclass(frozen=True)
class TangentScene:
    """A polygon circumscribed about the base conic.

    The scene points are the tangency points; side X is the tangent at X and
    vertex "XY" is the meet of consecutive sides X and Y.
    """

    scene: Scene

    def __post_init__(self) -> None:
        if self.scene.conic.is_degenerate:
            raise PreconditionError("tangent scenes need an irreducible base conic")
        if len(set(self.scene.points.values())) != len(self.scene.points):
            raise PreconditionError("tangency points are not pairwise distinct")
        if len(set(self.vertices.values())) != len(self.vertices):
            raise PreconditionError("polygon vertices coincide")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.scene.labels

    @property
    def sides(self) -> dict[str, HLine]:
        return {x: tangent_at(self.scene.conic, p) for x, p in self.scene.points.items()}

    @property
    def vertices(self) -> dict[str, HPoint]:
        sides = self.sides
        labels = self.labels
        return {
            a + b: meet(sides[a], sides[b])
            for a, b in zip(labels, labels[1:] + labels[:1])
        }

    def dual_scene(self) -> Scene:
        """Scene of the dual points of the sides, on the dual conic."""
        dual = dualize(self.scene.conic)
        assert isinstance(dual, Conic)
        points = {x: dualize(line) for x, line in self.sides.items()}
        params: dict[str, Fraction | None] = {}
        if self.scene.conic == UNIT_CIRCLE and dual == UNIT_CIRCLE:
            # the tangent at parameter t dualizes to the point at parameter -1/t
            for x, t in self.scene.params.items():
                params[x] = None if t == 0 else (Fraction(0) if t is None else -1 / t)
        kind = {6: "hex", 8: "oct"}.get(len(points), "ngon")
        return Scene(conic=dual, points=points, seed=self.scene.seed, kind=kind, params=params)  # type: ignore[arg-type]


def tangent_general_position(scene: Scene) -> list[str]:
    """Problems with a tangent scene; its dual must be in general position."""
    from . import hexagon, octagon

    try:
        dual = TangentScene(scene).dual_scene()
    except (PreconditionError, DegenerateConicDual) as e:
        return [e.message]
    if len(dual.labels) == 6:
        return [f"dual: {p}" for p in hexagon.general_position(dual)]
    if len(dual.labels) == 8:
        return [f"dual: {p}" for p in octagon.general_position(dual)]
    return []


def pappus_general_position(scene: Scene) -> list[str]:
    try:
        pappus_points(scene)
    except MysticumError as e:
        return [e.message]
    return []


# === Dual statements ===


def _dual_hex(t: TangentScene) -> HexScene:
    if len(t.labels) != 6:
        raise PreconditionError("statement needs a tangent hexagon", {"labels": list(t.labels)})
    return HexScene(t.dual_scene())


def _dual_oct(t: TangentScene) -> OctScene:
    if len(t.labels) != 8:
        raise PreconditionError("statement needs a tangent octagon", {"labels": list(t.labels)})
    return OctScene(t.dual_scene())


def _inscribed_octagon_conic(t: TangentScene) -> StatementResult:
    """Sides of the star octagon on the circumscribed vertices touch one conic.

    The star octagon joins every third vertex. Each side joins two vertices, so its
    dual point is the meet of two edges of the dual octagon.
    """
    labels = t.labels
    names = [a + b for a, b in zip(labels, labels[1:] + labels[:1])]
    vertices = t.vertices
    star = [names[(3 * i) % 8] for i in range(8)]
    star_sides = [join(vertices[a], vertices[b]) for a, b in zip(star, star[1:] + star[:1])]
    dual_points = [dualize(side) for side in star_sides]
    assert all(isinstance(p, HPoint) for p in dual_points)
    fits = coconic(dual_points)  # type: ignore[arg-type]
    detail: dict[str, Any] = {"star_octagon": star}
    if fits:
        point_conic = conic_through(dual_points)  # type: ignore[arg-type]
        detail["point_conic"] = list(point_conic.key)
        if not point_conic.is_degenerate:
            inscribed = dualize(point_conic)
            assert isinstance(inscribed, Conic)
            detail["inscribed_conic"] = list(inscribed.key)
    s = _dual_oct(t)
    m1 = Matching.parse("AB|CD|EF|GH")
    m2 = Matching.parse("BC|DE|FG|AH")
    meets = classical_meets(s, m1, m2)
    detail["meets_match_star_sides"] = set(meets) == set(dual_points)
    return StatementResult("thm6_3", fits and detail["meets_match_star_sides"], detail)


def verify_dual(statement: str, t: TangentScene) -> StatementResult:
    """Verdict of one dual statement, computed in the dual scene."""
    if statement == "prop6_1":
        hex_scene = HexScene(_dual_hex(t).scene.relabel(DUAL_HEX_RELABEL))
        return StatementResult("prop6_1", prop_3_2_verify(hex_scene), {
            "dual_scene": hex_scene.scene.scene_hash,
            "relabeling": DUAL_HEX_RELABEL,
        })
    elif statement == "thm6_2":
        hex_scene = _dual_hex(t)
        return StatementResult("thm6_2", prop_3_5_verify(hex_scene), {
            "dual_scene": hex_scene.scene.scene_hash,
        })
    elif statement == "thm6_3":
        return _inscribed_octagon_conic(t)
    elif statement == "thm6_4":
        s = _dual_oct(t)
        cs, ds = side_conics(s)
        q1 = poly_mul(cs[0].form, ds[0].form)
        q2 = poly_mul(cs[1].form, ds[1].form)
        cert = mystic_certificate(s, q1, q2)
        detail: dict[str, Any] = {"certificate": cert.to_dict()}
        passed = cert.verify() and cert.degree == 2
        if passed and not cert.conic().is_degenerate:
            touching = dualize(cert.conic())
            assert isinstance(touching, Conic)
            detail["tangent_conic"] = list(touching.key)
        return StatementResult("thm6_4", passed, detail)
    elif statement == "thm6_5":
        s = _dual_oct(t)
        cs, ds = side_conics(s)
        quartics = [poly_mul(cs[i].form, ds[i].form) for i in range(3)]
        certs = [
            mystic_certificate(s, quartics[0], quartics[1]),
            mystic_certificate(s, quartics[0], quartics[2]),
            mystic_certificate(s, quartics[1], quartics[2]),
        ]
        rank = curve_rank([c.residual for c in certs])
        return StatementResult("thm6_5", all(c.verify() for c in certs) and rank <= 2, {
            "conics": [list(c.conic().key) for c in certs],
            "rank": rank,
        })
    elif statement == "thm6_6":
        s = _dual_oct(t)
        cs, ds = side_conics(s)
        q = poly_mul(cs[3].form, ds[3].form)
        result = steiner_conic_data(s, q, cs[:3], ds[:3])
        return StatementResult("thm6_6", result.common is not None, result.to_dict())
    raise ValueError(f"Unknown dual statement: {statement}")


def verify_duals(scene: Scene, statement: str = "all") -> list[StatementResult]:
    t = TangentScene(scene)
    if statement == "all":
        names = DUAL_STATEMENTS[:2] if len(t.labels) == 6 else DUAL_STATEMENTS[2:]
        return [verify_dual(name, t) for name in names]
    return [verify_dual(statement, t)]


# === Tangency-constrained curves ===


def _monomial_partial(mono: tuple[int, int, int], var: int, point: Sequence[Fraction]) -> Fraction:
    if mono[var] == 0:
        return Fraction(0)
    value = Fraction(mono[var])
    for i, (e, x) in enumerate(zip(mono, point)):
        power = e - 1 if i == var else e
        value *= Fraction(x) ** power
    return value


def tangency_rows(point: HPoint, line: HLine, degree: int) -> list[list[Fraction]]:
    """Linear conditions saying the gradient at ``point`` is proportional to ``line``."""
    coords = [Fraction(c) for c in point.coords]
    rows = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        rows.append([
            _monomial_partial(m, i, coords) * line.coeffs[j]
            - _monomial_partial(m, j, coords) * line.coeffs[i]
            for m in monomials(degree)
        ])
    return rows


def tangency_constrained_curve(
    points: Sequence[HPoint],
    tangents: Sequence[tuple[HPoint, HLine]],
    degree: int,
) -> list[HomoPoly]:
    """Basis of degree-d forms through the points, tangent to each line at its point.

    Tangency points are added to the vanishing conditions.
    """
    through = list(points) + [p for p, _ in tangents if p not in points]
    rows = [list(r) for r in evaluation_matrix(through, degree).to_rows()] if through else []
    for p, line in tangents:
        if not line.contains(p):
            raise PreconditionError("tangency point is not on its line", {"point": point_dict(p)})
        rows.extend(tangency_rows(p, line, degree))
    matrix = RatMatrix.from_rows(rows, cols=len(monomials(degree)))
    basis = [HomoPoly.from_coeffs(degree, v) for v in nullspace(matrix)]
    if not basis:
        raise EmptySpace(
            "no curve satisfies the incidence and tangency conditions",
            {"degree": degree, "points": len(through), "tangents": len(tangents)},
        )
    logger.debug("tangency space: degree %d, dimension %d", degree, len(basis))
    return basis


def _two_members(
    basis: Sequence[HomoPoly], rng: Lcg64, avoid: Sequence[HomoPoly] = ()
) -> tuple[HomoPoly, HomoPoly]:
    if len(basis) < 2:
        raise EmptySpace("need a pencil of constrained curves", {"dimension": len(basis)})
    degree = basis[0].degree
    for _ in range(200):
        forms = []
        for _ in range(2):
            form = HomoPoly.zero(degree)
            for b in basis:
                form = form + b.scale(rng.randint(-3, 3))
            forms.append(form)
        f, g = forms
        if f.is_zero() or g.is_zero() or curve_rank([f, g]) < 2:
            continue
        if shares_component(f, g) or any(has_avoided_component(h, avoid) for h in forms):
            continue
        return f, g
    raise EmptySpace("no pair of constrained curves without a common component")


# === Degenerate statements ===


def _circle_points(scene: Scene, count: int, statement: str) -> list[HPoint]:
    if len(scene.labels) != count:
        raise PreconditionError(
            f"{statement} needs {count} points on the base conic",
            {"labels": list(scene.labels)},
        )
    if scene.conic.is_degenerate:
        raise PreconditionError(f"{statement} needs an irreducible base conic")
    points = list(scene.points.values())
    if len(set(points)) != count:
        raise PreconditionError("points are not pairwise distinct")
    return points


def tangent_residual(
    scene: Scene, degree: int, statement: str, seed: int | None = None
) -> tuple[list[HomoPoly], Any]:
    """Two curves through the points sharing the conic tangent at the first one, and their residual."""
    points = _circle_points(scene, DEGENERATE_SIZES[statement], statement)
    first, rest = points[0], points[1:]
    tangent = tangent_at(scene.conic, first)
    basis = tangency_constrained_curve(rest, [(first, tangent)], degree)
    rng = Lcg64((scene.seed if seed is None else seed) * 2 + 1)
    d1, d2 = _two_members(basis, rng, [scene.conic.form])
    return basis, residual_curve(d1, d2, scene.conic, points, doubled=1)


def quadrilateral_points(scene: Scene) -> dict[str, HPoint]:
    """Meets of opposite sides and of opposite tangents of an inscribed quadrilateral."""
    a, b, c, d = _circle_points(scene, 4, "prop7_3")
    conic = scene.conic
    return {
        "M": meet(join(a, d), join(b, c)),
        "N": meet(join(a, b), join(c, d)),
        "P": meet(tangent_at(conic, a), tangent_at(conic, c)),
        "Q": meet(tangent_at(conic, b), tangent_at(conic, d)),
    }


def tangential_triangle(scene: Scene) -> dict[str, HLine]:
    """Cevians from each vertex of the tangential triangle to the opposite touch point."""
    p, q, r = _circle_points(scene, 3, "prop7_4")
    conic = scene.conic
    tp, tq, tr = (tangent_at(conic, x) for x in (p, q, r))
    a = meet(tp, tr)
    b = meet(tp, tq)
    c = meet(tq, tr)
    return {"AQ": join(a, q), "BR": join(b, r), "CP": join(c, p)}


def pappus_points(scene: Scene) -> list[HPoint]:
    """Opposite-side meets of the hexagon ABCDEF whose vertices alternate between two lines."""
    if scene.labels != tuple(LABELS6):
        raise PreconditionError("pappus needs labels A..F", {"labels": list(scene.labels)})
    pts = [scene[x] for x in LABELS6]
    if len(set(pts)) != 6:
        raise PreconditionError("points are not pairwise distinct")
    sides = [join(pts[i], pts[(i + 1) % 6]) for i in range(6)]
    meets = [meet(sides[i], sides[i + 3]) for i in range(3)]
    if len(set(meets)) != 3:
        raise PreconditionError("opposite-side meets coincide", {"meets": [point_dict(p) for p in meets]})
    return meets


def _line_gap(line: HLine, limit: HLine) -> Fraction:
    """Largest coordinate difference after scaling both lines to 1 at the same pivot."""
    k = next(i for i in range(3) if limit.coeffs[i] != 0)
    if line.coeffs[k] == 0:
        return Fraction(1)
    a = [Fraction(c, line.coeffs[k]) for c in line.coeffs]
    b = [Fraction(c, limit.coeffs[k]) for c in limit.coeffs]
    return max(abs(x - y) for x, y in zip(a, b))


@dataclass
class LimitAgreement:
    limit_line: HLine
    lines: list[HLine]
    gaps: list[Fraction]

    @property
    def monotone(self) -> bool:
        return all(b < a for a, b in zip(self.gaps, self.gaps[1:]))

    def to_dict(self) -> dict[str, Any]:
        return {
            "limit_line": list(self.limit_line.coeffs),
            "steps": list(LIMIT_STEPS),
            "lines": [list(line.coeffs) for line in self.lines],
            "gaps": [format_rat(g) for g in self.gaps],
            "monotone": self.monotone,
        }


def pascal_limit_agreement(scene: Scene) -> LimitAgreement:
    """Residual lines of the hexagon with A doubled at t + 1/N approach the tangency line."""
    _circle_points(scene, 5, "limit")
    labels = scene.labels
    if scene.conic != UNIT_CIRCLE or scene.params.get(labels[0]) is None:
        raise PreconditionError("limit agreement needs a finite circle parameter for the doubled vertex")
    a, b, c, d, e = (scene[x] for x in labels)

    def residual_line(d1: HomoPoly, d2: HomoPoly, base: list[HPoint], doubled: int = 0) -> HLine:
        return residual_curve(d1, d2, scene.conic, base, doubled=doubled).line()

    limit = residual_line(
        poly_product([tangent_at(scene.conic, a).form, join(b, c).form, join(d, e).form]),
        poly_product([join(a, b).form, join(c, d).form, join(e, a).form]),
        [a, b, c, d, e],
        doubled=1,
    )
    t_a = scene.params[labels[0]]
    assert t_a is not None
    lines, gaps = [], []
    for n in LIMIT_STEPS:
        near = param_point(t_a + Fraction(1, n))
        if near in (b, c, d, e):
            raise PreconditionError("doubled vertex hits another vertex", {"step": n})
        line = residual_line(
            poly_product([join(a, near).form, join(b, c).form, join(d, e).form]),
            poly_product([join(near, b).form, join(c, d).form, join(e, a).form]),
            [a, near, b, c, d, e],
        )
        lines.append(line)
        gaps.append(_line_gap(line, limit))
    return LimitAgreement(limit_line=limit, lines=lines, gaps=gaps)


def verify_degenerate(statement: str, scene: Scene) -> StatementResult:
    if statement == "prop7_1":
        basis, cert = tangent_residual(scene, 3, statement)
        return StatementResult("prop7_1", cert.verify() and cert.degree == 1, {
            "space_dimension": len(basis),
            "certificate": cert.to_dict(),
        })
    elif statement == "prop7_2":
        basis, cert = tangent_residual(scene, 4, statement)
        return StatementResult("prop7_2", cert.verify() and cert.degree == 2, {
            "space_dimension": len(basis),
            "certificate": cert.to_dict(),
        })
    elif statement == "prop7_3":
        pts = quadrilateral_points(scene)
        return StatementResult("prop7_3", collinear(list(pts.values())), {
            k: point_dict(p) for k, p in pts.items()
        })
    elif statement == "prop7_4":
        cevians = tangential_triangle(scene)
        return StatementResult("prop7_4", concurrent(list(cevians.values())), {
            k: list(line.coeffs) for k, line in cevians.items()
        })
    elif statement == "pappus":
        meets = pappus_points(scene)
        return StatementResult("pappus", collinear(meets), {"meets": [point_dict(p) for p in meets]})
    elif statement == "limit":
        agreement = pascal_limit_agreement(scene)
        return StatementResult("limit", agreement.monotone, agreement.to_dict())
    raise ValueError(f"Unknown degenerate statement: {statement}")


def verify_degenerates(scene: Scene, statement: str = "all") -> list[StatementResult]:
    if statement == "all":
        if scene.kind == "pappus":
            names = ["pappus"]
        else:
            names = [
                st for st in DEGENERATE_STATEMENTS
                if st != "pappus" and DEGENERATE_SIZES[st] == len(scene.labels)
            ]
        if not names:
            raise PreconditionError("no degenerate statement fits this scene", {"labels": list(scene.labels)})
        return [verify_degenerate(name, scene) for name in names]
    return [verify_degenerate(statement, scene)]


__all__ = [
    "DEGENERATE_STATEMENTS",
    "DUAL_STATEMENTS",
    "LimitAgreement",
    "TangentScene",
    "pappus_general_position",
    "pascal_limit_agreement",
    "tangency_constrained_curve",
    "tangent_general_position",
    "verify_degenerate",
    "verify_degenerates",
    "verify_dual",
    "verify_duals",
]
