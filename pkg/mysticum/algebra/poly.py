"""Homogeneous ternary forms with exact rational coefficients.

Coefficients are stored in graded-lex order with x > y > z. For degree d the
monomial x^a y^b z^c sits at the position listed by ``monomials(d)``:

    d=1: x, y, z
    d=2: x^2, xy, xz, y^2, yz, z^2
    d=3: x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
    d=4: x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3, xy^2z, xyz^2, xz^3,
         y^4, y^3z, y^2z^2, yz^3, z^4
    d=5: x^5, x^4y, x^4z, x^3y^2, x^3yz, x^3z^2, x^2y^3, x^2y^2z, x^2yz^2,
         x^2z^3, xy^4, xy^3z, xy^2z^2, xyz^3, xz^4, y^5, y^4z, y^3z^2, y^2z^3,
         yz^4, z^5
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Sequence

from ..errors import NotDivisible
from .linear import RatMatrix, Scalar, canonical, solve, to_rat

Monomial = tuple[int, int, int]


@cache
def monomials(degree: int) -> tuple[Monomial, ...]:
    """Exponent triples of degree ``degree`` in graded-lex order."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return tuple(
        (a, b, degree - a - b)
        for a in range(degree, -1, -1)
        for b in range(degree - a, -1, -1)
    )


@cache
def monomial_index(degree: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(degree))}


def dimension(degree: int) -> int:
    return (degree + 1) * (degree + 2) // 2


def evaluation_row(point: Sequence[Scalar], degree: int) -> list[Fraction]:
    """Values of every degree-d monomial at ``point``."""
    x, y, z = (to_rat(c) for c in point)
    return [x**a * y**b * z**c for a, b, c in monomials(degree)]


@dataclass(frozen=True)
class HomoPoly:
    """A homogeneous form of fixed degree in x, y, z."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.coeffs) != dimension(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {dimension(self.degree)} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(to_rat(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, degree: int, coeffs: Iterable[Scalar | str]) -> HomoPoly:
        return cls(degree, tuple(to_rat(c) for c in coeffs))

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[Monomial, Scalar]) -> HomoPoly:
        index = monomial_index(degree)
        coeffs = [Fraction(0)] * dimension(degree)
        for mono, value in terms.items():
            if sum(mono) != degree:
                raise ValueError(f"monomial {mono} is not of degree {degree}")
            coeffs[index[mono]] += to_rat(value)
        return cls(degree, tuple(coeffs))

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar) -> HomoPoly:
        return cls.from_coeffs(1, (a, b, c))

    @classmethod
    def zero(cls, degree: int) -> HomoPoly:
        return cls(degree, (Fraction(0),) * dimension(degree))

    # --- identity ---

    @property
    def key(self) -> tuple[int, ...]:
        """Canonical primitive integer coefficient vector."""
        return canonical(self.coeffs)

    def canonical(self) -> HomoPoly:
        return HomoPoly(self.degree, tuple(Fraction(v) for v in self.key))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_proportional(self, other: HomoPoly) -> bool:
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.key == other.key

    def terms(self) -> dict[Monomial, Fraction]:
        return {m: c for m, c in zip(monomials(self.degree), self.coeffs) if c != 0}

    # --- arithmetic ---

    def _check_degree(self, other: HomoPoly) -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: HomoPoly) -> HomoPoly:
        self._check_degree(other)
        return HomoPoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: HomoPoly) -> HomoPoly:
        self._check_degree(other)
        return HomoPoly(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> HomoPoly:
        return self.scale(-1)

    def scale(self, factor: Scalar) -> HomoPoly:
        f = to_rat(factor)
        return HomoPoly(self.degree, tuple(c * f for c in self.coeffs))

    def __mul__(self, other: HomoPoly | Scalar) -> HomoPoly:
        if isinstance(other, HomoPoly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> HomoPoly:
        return self.scale(other)

    def __call__(self, point: Sequence[Scalar]) -> Fraction:
        return poly_eval(self, point)

    def partial(self, var: int) -> HomoPoly:
        """Partial derivative in x (0), y (1) or z (2)."""
        if self.degree == 0:
            raise ValueError("derivative of a constant form")
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self.terms().items():
            e = mono[var]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[var] -= 1
            key = (lowered[0], lowered[1], lowered[2])
            terms[key] = terms.get(key, Fraction(0)) + c * e
        return HomoPoly.from_terms(self.degree - 1, terms)

    def gradient_at(self, point: Sequence[Scalar]) -> tuple[Fraction, Fraction, Fraction]:
        g = tuple(self.partial(i)(point) for i in range(3))
        return g[0], g[1], g[2]

    def __str__(self) -> str:
        parts: list[str] = []
        for (a, b, c), coeff in self.terms().items():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in (("x", a), ("y", b), ("z", c))
                if e
            ]
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def poly_mul(f: HomoPoly, g: HomoPoly) -> HomoPoly:
    """Exact product; the degree is the sum of degrees."""
    out: dict[Monomial, Fraction] = {}
    g_terms = g.terms()
    for (a1, b1, c1), u in f.terms().items():
        for (a2, b2, c2), v in g_terms.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = out.get(key, Fraction(0)) + u * v
    return HomoPoly.from_terms(f.degree + g.degree, out)


def poly_product(factors: Sequence[HomoPoly]) -> HomoPoly:
    if not factors:
        raise ValueError("empty product")
    result = factors[0]
    for factor in factors[1:]:
        result = poly_mul(result, factor)
    return result


def poly_eval(f: HomoPoly, point: Sequence[Scalar]) -> Fraction:
    """Exact value at the given representative."""
    return sum(
        (c * v for c, v in zip(f.coeffs, evaluation_row(point, f.degree)) if c != 0),
        Fraction(0),
    )


def multiplication_matrix(g: HomoPoly, quotient_degree: int) -> RatMatrix:
    """Matrix of Q -> g·Q from degree-q forms to degree (q + deg g) forms."""
    target = monomial_index(g.degree + quotient_degree)
    columns: list[list[Fraction]] = []
    g_terms = g.terms()
    for a, b, c in monomials(quotient_degree):
        col = [Fraction(0)] * len(target)
        for (a2, b2, c2), v in g_terms.items():
            col[target[(a + a2, b + b2, c + c2)]] += v
        columns.append(col)
    rows = [[col[i] for col in columns] for i in range(len(target))]
    return RatMatrix.from_rows(rows, cols=len(columns))


def poly_divide_exact(f: HomoPoly, g: HomoPoly) -> HomoPoly:
    """Q with f = g·Q exactly, found as a linear solve on the quotient coefficients.

    The quotient keeps the scale that makes the identity hold, so it is not
    canonical; callers that compare curves use ``.canonical()`` or ``.key``.
    """
    if g.is_zero():
        raise NotDivisible("division by the zero form")
    q_degree = f.degree - g.degree
    if q_degree < 0:
        raise NotDivisible(
            "dividend degree is below divisor degree",
            {"dividend_degree": f.degree, "divisor_degree": g.degree},
        )
    solution = solve(multiplication_matrix(g, q_degree), f.coeffs)
    if solution is None:
        raise NotDivisible(
            "no exact quotient",
            {"dividend": [str(c) for c in f.coeffs], "divisor": [str(c) for c in g.coeffs]},
        )
    return HomoPoly(q_degree, solution)
