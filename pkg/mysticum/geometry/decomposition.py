"""Residual certificates and pencils.

The residual intersection of two curves through 2d points of an irreducible
conic C is certified by an exact identity

    lambda * D1 + mu * D2 = C * R

found by forcing the combination to vanish at one more point of C and dividing.
R carries the residual points without computing them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..algebra.linear import (
    RatMatrix,
    Scalar,
    format_rat,
    nullspace,
    rank_of_rows,
    row_reduced_basis,
    to_rat,
)
from ..algebra.poly import (
    HomoPoly,
    multiplication_matrix,
    poly_divide_exact,
    poly_mul,
)
from ..errors import (
    AmbiguousIntersection,
    DependentCurves,
    NotDivisible,
    PreconditionError,
    SharedComponent,
)
from .projective import UNIT_CIRCLE, Conic, HLine, HPoint, conic_point, param_point

logger = logging.getLogger(__name__)

AUX_PARAMETERS: tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class ResidualCertificate:
    """lam * d1 + mu * d2 = divisor * residual, exactly."""

    lam: Fraction
    mu: Fraction
    residual: HomoPoly
    divisor: Conic
    d1: HomoPoly
    d2: HomoPoly
    aux_parameter: Fraction

    def verify(self) -> bool:
        lhs = self.d1.scale(self.lam) + self.d2.scale(self.mu)
        rhs = poly_mul(self.divisor.form, self.residual)
        return (lhs - rhs).is_zero()

    @property
    def degree(self) -> int:
        return self.residual.degree

    def line(self) -> HLine:
        if self.residual.degree != 1:
            raise ValueError(f"residual has degree {self.residual.degree}, not a line")
        return HLine.from_form(self.residual)

    def conic(self) -> Conic:
        if self.residual.degree != 2:
            raise ValueError(f"residual has degree {self.residual.degree}, not a conic")
        return Conic(self.residual)

    def to_dict(self) -> dict[str, Any]:
        return {
            "lambda": format_rat(self.lam),
            "mu": format_rat(self.mu),
            "residual": [format_rat(c) for c in self.residual.coeffs],
            "divisor": [format_rat(c) for c in self.divisor.form.coeffs],
            "aux_parameter": format_rat(self.aux_parameter),
        }


def shares_component(f: HomoPoly, g: HomoPoly) -> bool:
    """True when f and g have a common non-constant factor.

    Two forms of degree d share a factor iff U·f = V·g has a nonzero solution
    with deg U = deg V = d - 1; this is a kernel computation on a Sylvester-style
    matrix, so no factorization is needed.
    """
    if f.degree != g.degree or f.degree == 0:
        raise ValueError("shares_component needs two forms of equal positive degree")
    e = f.degree - 1
    mf = multiplication_matrix(f, e).to_rows()
    mg = multiplication_matrix(g, e).to_rows()
    rows = [list(a) + [-v for v in b] for a, b in zip(mf, mg)]
    return bool(nullspace(RatMatrix.from_rows(rows)))


def _independent(f: HomoPoly, g: HomoPoly) -> bool:
    return rank_of_rows([f.coeffs, g.coeffs]) == 2


def residual_curve(
    d1: HomoPoly,
    d2: HomoPoly,
    conic: Conic,
    base_points: Sequence[HPoint],
    aux_parameters: Sequence[Scalar] | None = None,
    check_components: bool = True,
    doubled: int = 0,
) -> ResidualCertificate:
    """Certificate that the residual intersection of d1, d2 lies on a curve of degree d - 2.

    The base points count 2d with multiplicity; ``doubled`` of them are tangency
    points that count twice.
    """
    if d1.degree != d2.degree:
        raise PreconditionError(
            "curves must have equal degree", {"degrees": [d1.degree, d2.degree]}
        )
    if d1.degree < 3:
        raise PreconditionError("residual curves need degree at least 3", {"degree": d1.degree})
    if conic.is_degenerate:
        raise PreconditionError("divisor conic is degenerate", {"conic": list(conic.key)})
    if len(set(base_points)) + doubled != 2 * d1.degree:
        raise PreconditionError(
            "need 2d base points counted with multiplicity",
            {"degree": d1.degree, "points": len(set(base_points)), "doubled": doubled},
        )
    for p in base_points:
        if not conic.contains(p):
            raise PreconditionError("base point is not on the divisor", {"point": list(p.coords)})
        if d1(p.coords) != 0 or d2(p.coords) != 0:
            raise PreconditionError("base point is not on both curves", {"point": list(p.coords)})
    if not _independent(d1, d2):
        raise DependentCurves("curves are proportional", {"curve": list(d1.key)})
    if check_components and shares_component(d1, d2):
        raise SharedComponent("curves share a component", {"d1": list(d1.key), "d2": list(d2.key)})

    anchor = param_point(None) if conic.contains(param_point(None)) else None
    if anchor is None:
        if not base_points:
            raise PreconditionError("need a rational anchor point on the divisor")
        anchor = base_points[0]
    base = set(base_points)
    params = AUX_PARAMETERS if aux_parameters is None else aux_parameters

    for t in params:
        t = to_rat(t)
        if conic == UNIT_CIRCLE and anchor == param_point(None):
            x0: HPoint | None = param_point(t)
        else:
            x0 = conic_point(conic, anchor, t)
        if x0 is None or x0 in base:
            logger.debug("aux parameter %s skipped: base point or undefined", t)
            continue
        a = d1(x0.coords)
        b = d2(x0.coords)
        if a == 0 and b == 0:
            logger.debug("aux parameter %s skipped: both curves vanish", t)
            continue
        lam, mu = b, -a
        combo = d1.scale(lam) + d2.scale(mu)
        try:
            quotient = poly_divide_exact(combo, conic.form)
        except NotDivisible:
            logger.debug("aux parameter %s: combination not divisible by the conic", t)
            continue
        residual = quotient.canonical()
        # rescale lambda, mu so the identity survives canonicalization
        ratio = _ratio(residual, quotient)
        return ResidualCertificate(
            lam=lam * ratio,
            mu=mu * ratio,
            residual=residual,
            divisor=conic,
            d1=d1,
            d2=d2,
            aux_parameter=t,
        )
    raise SharedComponent(
        "no auxiliary parameter produced an exact quotient",
        {"parameters": [format_rat(to_rat(t)) for t in params]},
    )


def _ratio(scaled: HomoPoly, original: HomoPoly) -> Fraction:
    for s, o in zip(scaled.coeffs, original.coeffs):
        if o != 0:
            return s / o
    raise ValueError("zero residual")


# === Pencils ===


@dataclass(frozen=True)
class Pencil:
    """A 2-dimensional space of degree-d forms with a reduced echelon basis."""

    degree: int
    basis: tuple[HomoPoly, HomoPoly]

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.basis[0].key, self.basis[1].key)

    def contains(self, form: HomoPoly) -> bool:
        return in_pencil(form, self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "basis": [[format_rat(c) for c in b.coeffs] for b in self.basis],
        }


def pencil_of(f: HomoPoly, g: HomoPoly) -> Pencil:
    if f.degree != g.degree:
        raise PreconditionError("pencil members must share a degree", {"degrees": [f.degree, g.degree]})
    if not _independent(f, g):
        raise DependentCurves("pencil generators are proportional", {"form": list(f.key)})
    rows = row_reduced_basis([f.coeffs, g.coeffs])
    first, second = (HomoPoly.from_coeffs(f.degree, r) for r in rows)
    return Pencil(f.degree, (first, second))


def in_pencil(form: HomoPoly, pencil: Pencil) -> bool:
    if form.degree != pencil.degree:
        raise PreconditionError("degree mismatch", {"form": form.degree, "pencil": pencil.degree})
    return rank_of_rows([pencil.basis[0].coeffs, pencil.basis[1].coeffs, form.coeffs]) == 2


def _intersect(basis_a: list[tuple[Fraction, ...]], basis_b: list[tuple[Fraction, ...]]) -> list[tuple[int, ...]]:
    """Canonical basis of span(a) ∩ span(b) for independent bases."""
    n = len(basis_a[0])
    cols = [list(v) for v in basis_a] + [[-c for c in v] for v in basis_b]
    rows = [[col[i] for col in cols] for i in range(n)]
    kernel = nullspace(RatMatrix.from_rows(rows))
    if not kernel:
        return []
    elements = []
    for w in kernel:
        element = [Fraction(0)] * n
        for coeff, vec in zip(w[: len(basis_a)], basis_a):
            for i in range(n):
                element[i] += coeff * vec[i]
        elements.append(element)
    return row_reduced_basis(elements)


def common_member(pencils: Sequence[Pencil]) -> HomoPoly | None:
    """The common form of several pencils, None if they share nothing."""
    if len(pencils) < 2:
        raise PreconditionError("common_member needs at least two pencils")
    degree = pencils[0].degree
    if any(p.degree != degree for p in pencils):
        raise PreconditionError("pencils must share a degree")
    span: list[tuple[Fraction, ...]] = [b.coeffs for b in pencils[0].basis]
    for pencil in pencils[1:]:
        reduced = _intersect(span, [b.coeffs for b in pencil.basis])
        if not reduced:
            return None
        span = [tuple(Fraction(c) for c in v) for v in reduced]
    if len(span) >= 2:
        raise AmbiguousIntersection(
            "pencils share a space of dimension at least 2",
            {"dimension": len(span)},
        )
    return HomoPoly.from_coeffs(degree, span[0])


def curve_rank(forms: Sequence[HomoPoly]) -> int:
    return rank_of_rows([f.coeffs for f in forms])


__all__ = [
    "AUX_PARAMETERS",
    "Pencil",
    "ResidualCertificate",
    "common_member",
    "curve_rank",
    "in_pencil",
    "pencil_of",
    "residual_curve",
    "shares_component",
]
