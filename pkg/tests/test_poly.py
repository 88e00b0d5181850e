from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from mysticum.algebra.poly import (
    HomoPoly,
    dimension,
    monomials,
    poly_divide_exact,
    poly_mul,
    poly_product,
)
from mysticum.errors import NotDivisible

X, Y, Z = sympy.symbols("x y z")


def _to_sympy(f: HomoPoly) -> sympy.Expr:
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * X**a * Y**b * Z**e for (a, b, e), c in f.terms().items()),
        sympy.Integer(0),
    )


def test_monomial_order() -> None:
    assert monomials(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert [dimension(d) for d in range(6)] == [1, 3, 6, 10, 15, 21]
    assert all(len(monomials(d)) == dimension(d) for d in range(6))


def test_wrong_coefficient_count_rejected() -> None:
    with pytest.raises(ValueError):
        HomoPoly.from_coeffs(2, [1, 2, 3])


def test_product_matches_sympy() -> None:
    f = HomoPoly.linear(1, Fraction(-2, 3), 5)
    g = HomoPoly.from_coeffs(2, [3, 0, -1, Fraction(1, 2), 4, -7])
    h = HomoPoly.linear(0, 1, -1)
    product = poly_product([f, g, h])
    expected = sympy.Poly(sympy.expand(_to_sympy(f) * _to_sympy(g) * _to_sympy(h)), X, Y, Z)
    assert product.degree == 4
    for (a, b, e), c in zip(monomials(4), product.coeffs):
        coeff = expected.coeff_monomial(X**a * Y**b * Z**e)
        assert c == Fraction(int(coeff.p), int(coeff.q))


def test_exact_division_recovers_factor() -> None:
    f = HomoPoly.linear(1, 1, 0)
    g = HomoPoly.from_coeffs(2, [1, 0, -2, 3, 0, 1])
    assert poly_divide_exact(poly_mul(f, g), f) == g


def test_division_by_non_factor_fails() -> None:
    circle = HomoPoly.from_coeffs(2, [1, 0, 0, 1, 0, -1])
    with pytest.raises(NotDivisible):
        poly_divide_exact(circle, HomoPoly.linear(1, 0, 0))
    with pytest.raises(NotDivisible):
        poly_divide_exact(HomoPoly.linear(1, 0, 0), circle)


def test_evaluation_and_partials() -> None:
    f = HomoPoly.from_terms(3, {(3, 0, 0): 1, (0, 1, 2): -2})
    assert f((1, 2, 3)) == 1 - 2 * 2 * 9
    assert f.partial(0) == HomoPoly.from_terms(2, {(2, 0, 0): 3})
    assert f.gradient_at((1, 1, 1)) == (Fraction(3), Fraction(-2), Fraction(-4))


def test_proportionality_and_canonical_key() -> None:
    f = HomoPoly.linear(2, -4, 6)
    assert f.is_proportional(f.scale(Fraction(-3, 7)))
    assert not f.is_proportional(HomoPoly.linear(1, 2, 3))
    assert f.key == (1, -2, 3)
    assert HomoPoly.zero(2).is_zero()


def test_exact_quotient_keeps_the_identity_scale() -> None:
    conic = HomoPoly.from_coeffs(2, [1, 0, 0, 1, 0, -1])
    line = HomoPoly.linear(Fraction(3, 2), -3, 6)
    q = poly_divide_exact(poly_mul(conic, line), conic)
    assert q == line
    assert q != q.canonical()
    assert q.canonical().key == (1, -2, 4)
    assert poly_mul(conic, q) == poly_mul(conic, line)
