"""Helpers shared by the theorem modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterable, Sequence

from ..algebra.poly import HomoPoly, poly_divide_exact, poly_product
from ..combinatorics import Matching
from ..errors import CollinearityFailure, DegenerateJoin, NotDivisible, PreconditionError
from ..geometry.projective import (
    Conic,
    HLine,
    HPoint,
    collinear,
    conic_through,
    curves_through,
    join,
)
from ..models import Scene
from ..scenes import Lcg64

FREE_POINT_SALT = 0x9E3779B97F4A7C15


@dataclass
class StatementResult:
    """Verdict of one named statement on one scene."""

    statement: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"statement": self.statement, "passed": self.passed, "detail": self.detail}


def point_dict(p: HPoint) -> list[int]:
    return list(p.coords)


def line_through(points: Sequence[HPoint], what: str = "points") -> HLine:
    """The common line of collinear points (at least two distinct)."""
    if not collinear(points):
        raise CollinearityFailure(
            f"{what} are not collinear", {"points": [point_dict(p) for p in points]}
        )
    first = points[0]
    for other in points[1:]:
        if other != first:
            return join(first, other)
    raise DegenerateJoin(f"{what} coincide", {"point": point_dict(first)})


def side(scene: Scene, a: str, b: str) -> HLine:
    """The line l(ab) through two labelled points."""
    return join(scene[a], scene[b])


def matching_form(scene: Scene, matching: Matching | str) -> HomoPoly:
    """Product of the lines of a matching, e.g. l(AB)·l(CD)·l(EF)."""
    if isinstance(matching, str):
        matching = Matching.parse(matching)
    return poly_product([side(scene, a, b).form for a, b in matching.pairs])


def require_labels(scene: Scene, labels: str) -> None:
    if scene.labels != tuple(labels):
        raise PreconditionError(
            f"scene must have labels {labels}",
            {"labels": list(scene.labels)},
        )
    if len(set(scene.points.values())) != len(labels):
        raise PreconditionError("scene points are not pairwise distinct")
    for label, point in scene.points.items():
        if not scene.conic.contains(point):
            raise PreconditionError(f"point {label} is off the base conic", {"label": label})


def free_points(scene: Scene, count: int, salt: int = 0, avoid: Iterable[HPoint] = ()) -> list[HPoint]:
    """Seeded affine points off the base conic, used where a construction has a free choice."""
    rng = Lcg64(scene.seed ^ FREE_POINT_SALT ^ salt)
    taken = set(scene.points.values()) | set(avoid)
    out: list[HPoint] = []
    while len(out) < count:
        p = HPoint.of(rng.rational(7, 3), rng.rational(7, 3), 1)
        if scene.conic.contains(p) or p in taken:
            continue
        taken.add(p)
        out.append(p)
    return out


def conic_with_free_point(scene: Scene, labels: str, salt: int) -> Conic:
    """The conic through the given labelled points and a seeded fifth point."""
    base = [scene[x] for x in labels]
    attempt = 0
    while True:
        (extra,) = free_points(scene, 1, salt + 7919 * attempt)
        attempt += 1
        if any(collinear([base[i], base[j], extra]) for i in range(4) for j in range(i + 1, 4)):
            continue
        conic = conic_through(base + [extra])
        if not conic.is_degenerate:
            return conic


@lru_cache(maxsize=None)
def relabeling(
    source: tuple[Matching, ...], target: tuple[Matching, ...], labels: str
) -> dict[str, str]:
    """A label permutation carrying the set ``source`` onto the set ``target``."""
    want = frozenset(target)
    for perm in permutations(labels):
        mapping = dict(zip(labels, perm))
        if frozenset(m.relabel(mapping) for m in source) == want:
            return mapping
    raise ValueError(f"no relabeling carries {source} to {target}")


def matchings(texts: Sequence[str]) -> tuple[Matching, ...]:
    return tuple(Matching.parse(t) for t in texts)


def has_avoided_component(form: HomoPoly, avoid: Sequence[HomoPoly]) -> bool:
    from ..geometry.decomposition import shares_component

    for g in avoid:
        if g.degree == form.degree:
            if shares_component(form, g):
                return True
            continue
        # lower-degree entries are irreducible divisors such as the base conic
        try:
            poly_divide_exact(form, g)
        except NotDivisible:
            continue
        return True
    return False


def random_forms_through(
    points: Sequence[HPoint],
    degree: int,
    count: int,
    rng: Lcg64,
    coefficient_bound: int = 3,
    avoid: Sequence[HomoPoly] = (),
    max_attempts: int = 1000,
) -> list[HomoPoly]:
    """Small integer combinations of the forms through ``points``, pairwise independent.

    Draws sharing a component with each other or with any form in ``avoid`` are
    redrawn; pass the base conic there so no draw contains it.
    """
    from ..geometry.decomposition import curve_rank, shares_component

    basis = curves_through(points, degree)
    if not basis:
        raise PreconditionError("no curve of this degree passes through the points", {"degree": degree})
    out: list[HomoPoly] = []
    for _ in range(max_attempts):
        if len(out) == count:
            return out
        coeffs = [rng.randint(-coefficient_bound, coefficient_bound) for _ in basis]
        if not any(coeffs):
            continue
        form = HomoPoly.zero(degree)
        for c, b in zip(coeffs, basis):
            form = form + b.scale(c)
        if curve_rank(out + [form]) != len(out) + 1:
            continue
        if any(shares_component(form, other) for other in out) or has_avoided_component(form, avoid):
            continue
        out.append(form)
    if len(out) == count:
        return out
    raise PreconditionError(
        "no admissible random curves found",
        {"degree": degree, "found": len(out), "wanted": count, "attempts": max_attempts},
    )
