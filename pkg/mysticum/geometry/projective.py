"""Projective points, lines and conics over the rationals.

All objects are stored canonically (primitive integers, positive leading entry),
so equality and hashing are projective. Points at infinity are ordinary points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..algebra.linear import (
    RatMatrix,
    Scalar,
    canonical,
    determinant,
    nullspace,
    rank,
    rank_of_rows,
    to_rat,
)
from ..algebra.poly import HomoPoly, evaluation_row, monomials, poly_eval, poly_mul
from ..errors import (
    DegenerateConicDual,
    DegenerateJoin,
    DegenerateMeet,
    NotOnConic,
    SingularPoint,
    UnderdeterminedConic,
)

Vector3 = tuple[Fraction, Fraction, Fraction]


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector3:
    u0, u1, u2 = (to_rat(c) for c in u)
    v0, v1, v2 = (to_rat(c) for c in v)
    return (u1 * v2 - u2 * v1, u2 * v0 - u0 * v2, u0 * v1 - u1 * v0)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    return sum((to_rat(a) * to_rat(b) for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True, order=True)
class HPoint:
    """A point of the projective plane."""

    coords: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.coords) != 3:
            raise ValueError("a projective point needs three coordinates")
        object.__setattr__(self, "coords", canonical(self.coords))

    @classmethod
    def of(cls, x: Scalar, y: Scalar, z: Scalar) -> HPoint:
        return cls((x, y, z))  # type: ignore[arg-type]

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.coords)

    def __len__(self) -> int:
        return 3

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    @property
    def at_infinity(self) -> bool:
        return self.coords[2] == 0

    def to_affine(self) -> tuple[float, float] | None:
        if self.at_infinity:
            return None
        x, y, z = self.coords
        return x / z, y / z

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True, order=True)
class HLine:
    """A line ax + by + cz = 0."""

    coeffs: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 3:
            raise ValueError("a projective line needs three coefficients")
        object.__setattr__(self, "coeffs", canonical(self.coeffs))

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar) -> HLine:
        return cls((a, b, c))  # type: ignore[arg-type]

    @classmethod
    def from_form(cls, form: HomoPoly) -> HLine:
        if form.degree != 1:
            raise ValueError("a line is a degree-1 form")
        return cls(tuple(form.coeffs))  # type: ignore[arg-type]

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.coeffs)

    def __len__(self) -> int:
        return 3

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    @property
    def form(self) -> HomoPoly:
        return HomoPoly.linear(*self.coeffs)

    def contains(self, point: HPoint) -> bool:
        return dot(self.coeffs, point.coords) == 0

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def _symmetric_from_form(form: HomoPoly) -> tuple[Vector3, Vector3, Vector3]:
    a, b, c, d, e, f = form.coeffs
    half = Fraction(1, 2)
    return (
        (a, b * half, c * half),
        (b * half, d, e * half),
        (c * half, e * half, f),
    )


@dataclass(frozen=True)
class Conic:
    """A conic given by a canonical quadratic form."""

    form: HomoPoly

    def __post_init__(self) -> None:
        if self.form.degree != 2:
            raise ValueError("a conic is a degree-2 form")
        if self.form.is_zero():
            raise ValueError("the zero form is not a conic")
        object.__setattr__(self, "form", self.form.canonical())

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar | str]) -> Conic:
        return cls(HomoPoly.from_coeffs(2, coeffs))

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[Scalar]]) -> Conic:
        q = [[to_rat(v) for v in row] for row in m]
        if any(q[i][j] != q[j][i] for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")
        return cls.from_coeffs(
            (q[0][0], 2 * q[0][1], 2 * q[0][2], q[1][1], 2 * q[1][2], q[2][2])
        )

    @property
    def key(self) -> tuple[int, ...]:
        return self.form.key

    @property
    def matrix(self) -> tuple[Vector3, Vector3, Vector3]:
        return _symmetric_from_form(self.form)

    def determinant(self) -> Fraction:
        return determinant(self.matrix)

    @property
    def is_degenerate(self) -> bool:
        return self.determinant() == 0

    def __call__(self, point: Sequence[Scalar]) -> Fraction:
        return poly_eval(self.form, point)

    def contains(self, point: HPoint) -> bool:
        return self(point) == 0

    def bilinear(self, p: Sequence[Scalar], q: Sequence[Scalar]) -> Fraction:
        m = self.matrix
        return sum(
            (m[i][j] * to_rat(p[i]) * to_rat(q[j]) for i in range(3) for j in range(3)),
            Fraction(0),
        )

    def __str__(self) -> str:
        return str(self.form)


UNIT_CIRCLE = Conic.from_coeffs((1, 0, 0, 1, 0, -1))

LineLike = Union[HLine, HomoPoly]


# === Joins, meets and incidence ===


def join(p: HPoint, q: HPoint) -> HLine:
    """The line through two distinct points."""
    c = cross(p.coords, q.coords)
    if all(v == 0 for v in c):
        raise DegenerateJoin("join of coincident points", {"point": list(p.coords)})
    return HLine(c)  # type: ignore[arg-type]


def meet(l: HLine, m: HLine) -> HPoint:
    """The common point of two distinct lines."""
    c = cross(l.coeffs, m.coeffs)
    if all(v == 0 for v in c):
        raise DegenerateMeet("meet of coincident lines", {"line": list(l.coeffs)})
    return HPoint(c)  # type: ignore[arg-type]


def collinear(points: Sequence[HPoint]) -> bool:
    if len(points) < 3:
        return True
    return rank_of_rows([p.coords for p in points]) <= 2


def concurrent(lines: Sequence[HLine]) -> bool:
    if len(lines) < 3:
        return True
    return rank_of_rows([l.coeffs for l in lines]) <= 2


def evaluation_matrix(points: Sequence[Sequence[Scalar]], degree: int) -> RatMatrix:
    """Rows are the monomial values of each point at the given degree."""
    return RatMatrix.from_rows(
        [evaluation_row(p, degree) for p in points], cols=len(monomials(degree))
    )


def curves_through(points: Sequence[HPoint], degree: int) -> list[HomoPoly]:
    """Canonical basis of the degree-d forms vanishing at every point."""
    if not points:
        matrix = RatMatrix(0, len(monomials(degree)), ())
    else:
        matrix = evaluation_matrix(points, degree)
    return [HomoPoly.from_coeffs(degree, v) for v in nullspace(matrix)]


def conic_through(points: Sequence[HPoint]) -> Conic:
    """The unique conic through five (or more) points."""
    if len(points) < 5:
        raise UnderdeterminedConic("need at least five points", {"count": len(points)})
    basis = curves_through(points, 2)
    if len(basis) != 1:
        raise UnderdeterminedConic(
            "points do not determine a unique conic",
            {"solutions": len(basis), "points": [list(p.coords) for p in points]},
        )
    return Conic(basis[0])


def coconic(points: Sequence[HPoint]) -> bool:
    if len(points) <= 5:
        return True
    return rank(evaluation_matrix(points, 2)) <= 5


def on_cubic_rank(points: Sequence[HPoint]) -> int:
    """Rank of the degree-3 evaluation matrix; at most 9 iff the points share a cubic."""
    return rank(evaluation_matrix(points, 3))


def tangent_at(conic: Conic, point: HPoint) -> HLine:
    if not conic.contains(point):
        raise NotOnConic("point is not on the conic", {"point": list(point.coords)})
    gradient = conic.form.gradient_at(point.coords)
    if all(g == 0 for g in gradient):
        raise SingularPoint("conic is singular at the point", {"point": list(point.coords)})
    return HLine(gradient)  # type: ignore[arg-type]


def param_point(t: Scalar | None) -> HPoint:
    """Rational point of x^2 + y^2 - z^2 at parameter t; None stands for t = infinity."""
    if t is None:
        return HPoint((-1, 0, 1))
    t = to_rat(t)
    return HPoint((1 - t * t, 2 * t, 1 + t * t))  # type: ignore[arg-type]


def parameter_of(point: HPoint) -> Fraction | None:
    """Inverse of ``param_point`` on the unit circle."""
    if not UNIT_CIRCLE.contains(point):
        raise NotOnConic("point is not on the unit circle", {"point": list(point.coords)})
    x, y, z = point.coords
    if x + z == 0:
        return None
    return Fraction(y, x + z)


def line_point_pair(line: HLine) -> tuple[Vector3, Vector3]:
    """Two distinct points spanning a line."""
    candidates = [cross(line.coeffs, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    nonzero = [c for c in candidates if any(v != 0 for v in c)]
    first = nonzero[0]
    for other in nonzero[1:]:
        if any(v != 0 for v in cross(first, other)):
            return first, other
    raise DegenerateJoin("line spanned by a single point", {"line": list(line.coeffs)})


def conic_point(conic: Conic, anchor: HPoint, t: Scalar) -> HPoint | None:
    """Second intersection of ``conic`` with the line through ``anchor`` in direction U + tV.

    U, V are the first pair of coordinate vectors independent of the anchor, so
    anchor (-1, 0, 1) on the unit circle reproduces ``param_point``.
    """
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    u = v = None
    for i in range(3):
        for j in range(i + 1, 3):
            if determinant([anchor.coords, basis[i], basis[j]]) != 0:
                u, v = basis[i], basis[j]
                break
        if u is not None:
            break
    assert u is not None and v is not None
    t = to_rat(t)
    direction = tuple(to_rat(a) + t * b for a, b in zip(u, v))
    c_dir = conic(direction)
    b_dir = conic.bilinear(anchor.coords, direction)
    coords = tuple(c_dir * p - 2 * b_dir * d for p, d in zip(anchor.coords, direction))
    if all(c == 0 for c in coords):
        return None
    return HPoint(coords)  # type: ignore[arg-type]


# === Duality ===


def adjugate(m: Sequence[Sequence[Scalar]]) -> tuple[Vector3, Vector3, Vector3]:
    q = [[to_rat(v) for v in row] for row in m]

    def cof(i: int, j: int) -> Fraction:
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = q[rows[0]][cols[0]] * q[rows[1]][cols[1]] - q[rows[0]][cols[1]] * q[rows[1]][cols[0]]
        return minor if (i + j) % 2 == 0 else -minor

    rows_out = tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))
    return rows_out  # type: ignore[return-value]


def dualize(obj: HPoint | HLine | Conic) -> HLine | HPoint | Conic:
    """Coordinate duality: points and lines swap, a conic goes to its adjugate."""
    if isinstance(obj, HPoint):
        return HLine(obj.coords)
    if isinstance(obj, HLine):
        return HPoint(obj.coeffs)
    if isinstance(obj, Conic):
        if obj.is_degenerate:
            raise DegenerateConicDual("degenerate conic has no dual conic", {"conic": list(obj.key)})
        return Conic.from_matrix(adjugate(obj.matrix))
    raise TypeError(f"Cannot dualize {type(obj).__name__}")


# === Collineations ===


@dataclass(frozen=True)
class Collineation:
    """An invertible projective map x -> T x."""

    matrix: tuple[Vector3, Vector3, Vector3]

    def __post_init__(self) -> None:
        m = tuple(tuple(to_rat(v) for v in row) for row in self.matrix)
        if determinant(m) == 0:
            raise ValueError("collineation matrix must be invertible")
        object.__setattr__(self, "matrix", m)

    @property
    def inverse_matrix(self) -> tuple[Vector3, Vector3, Vector3]:
        """Adjugate; a scalar multiple of the inverse, which suffices projectively."""
        return adjugate(self.matrix)

    def point(self, p: HPoint) -> HPoint:
        return HPoint(tuple(dot(row, p.coords) for row in self.matrix))  # type: ignore[arg-type]

    def line(self, l: HLine) -> HLine:
        inv = self.inverse_matrix
        return HLine(tuple(dot([inv[r][c] for r in range(3)], l.coeffs) for c in range(3)))  # type: ignore[arg-type]

    def form(self, f: HomoPoly) -> HomoPoly:
        """Push a form forward: the image curve is F(T^-1 x) = 0."""
        inv = self.inverse_matrix
        linear = [HomoPoly.linear(*inv[i]) for i in range(3)]
        result = HomoPoly.zero(f.degree)
        power_cache: dict[tuple[int, int], HomoPoly] = {}

        def power(i: int, e: int) -> HomoPoly:
            if (i, e) not in power_cache:
                acc = HomoPoly.from_coeffs(0, (1,))
                for _ in range(e):
                    acc = poly_mul(acc, linear[i])
                power_cache[(i, e)] = acc
            return power_cache[(i, e)]

        for (a, b, c), coeff in f.terms().items():
            term = poly_mul(poly_mul(power(0, a), power(1, b)), power(2, c))
            result = result + term.scale(coeff)
        return result

    def conic(self, c: Conic) -> Conic:
        return Conic(self.form(c.form))
