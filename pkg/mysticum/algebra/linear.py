"""Exact dense linear algebra over the rationals.

- Rationals are ``fractions.Fraction``; integers are accepted anywhere a rational is
- Elimination is fraction-free: rows are scaled to integers and reduced with the
  integer-preserving Bareiss/Jordan update, so every intermediate entry is a minor
- Canonical vectors are primitive integer tuples with a positive leading entry
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


def to_rat(value: Scalar | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot interpret {value!r} as a rational")


def format_rat(value: Scalar) -> str:
    """Serialize a rational as "p/q", omitting q when it is 1."""
    q = to_rat(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def clear_denominators(vec: Iterable[Scalar]) -> list[int]:
    """Scale a rational vector by the lcm of its denominators."""
    values = [to_rat(v) for v in vec]
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * scale) for v in values]


def canonical(vec: Iterable[Scalar]) -> tuple[int, ...]:
    """Primitive integer representative with the first nonzero entry positive.

    Raises ValueError for the zero vector.
    """
    ints = clear_denominators(vec)
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero vector has no canonical form")
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        g = -g
    return tuple(v // g for v in ints)


def is_zero(vec: Iterable[Scalar]) -> bool:
    return all(v == 0 for v in vec)


@dataclass(frozen=True)
class RatMatrix:
    """Row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> RatMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: list[Fraction] = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            entries.extend(to_rat(v) for v in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def apply(self, vec: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        v = [to_rat(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows))


# === Fraction-free elimination ===


def _integer_rows(rows: Iterable[Sequence[Scalar]]) -> list[list[int]]:
    return [clear_denominators(r) for r in rows]


def _eliminate(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Integer-preserving Gauss-Jordan elimination.

    Returns the reduced rows, the pivot columns and the last pivot value. On exit
    every pivot row holds that common pivot value in its pivot column and zeros in
    all other pivot columns.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            a[r], a[k] = a[k], a[r]
        pivot_row = a[r]
        p = pivot_row[c]
        for i in range(nrows):
            if i == r:
                continue
            f = a[i][c]
            a[i] = [(p * x - f * y) // prev for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        prev = p
        r += 1
    return a, pivots, prev


def rank(m: RatMatrix) -> int:
    """Exact rank."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots, _ = _eliminate(_integer_rows(m.to_rows()), m.cols)
    return len(pivots)


def rank_of_rows(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a list of equal-length vectors."""
    if not rows:
        return 0
    _, pivots, _ = _eliminate(_integer_rows(rows), len(rows[0]))
    return len(pivots)


def nullspace(m: RatMatrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel, one canonical vector per free column (ascending)."""
    if m.rows == 0:
        return [canonical([1 if i == j else 0 for i in range(m.cols)]) for j in range(m.cols)]
    reduced, pivots, d = _eliminate(_integer_rows(m.to_rows()), m.cols)
    pivot_set = set(pivots)
    basis: list[tuple[int, ...]] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = d
        for idx, c in enumerate(pivots):
            v[c] = -reduced[idx][f]
        basis.append(canonical(v))
    return basis


def solve(m: RatMatrix, b: Sequence[Scalar]) -> tuple[Fraction, ...] | None:
    """A particular solution of m·x = b with free variables set to zero, or None."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    augmented = [list(row) + [to_rat(bi)] for row, bi in zip(m.to_rows(), b)]
    reduced, pivots, d = _eliminate(_integer_rows(augmented), m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for idx, c in enumerate(pivots):
        x[c] = Fraction(reduced[idx][m.cols], d)
    return tuple(x)


def row_reduced_basis(rows: Sequence[Sequence[Scalar]]) -> list[tuple[int, ...]]:
    """Canonical basis of the row space: reduced echelon rows, each made primitive."""
    if not rows:
        return []
    reduced, pivots, _ = _eliminate(_integer_rows(rows), len(rows[0]))
    return [canonical(reduced[i]) for i in range(len(pivots))]


def determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant of a square matrix (fraction-free)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for r in rows:
        values = [to_rat(v) for v in r]
        s = lcm(*(v.denominator for v in values))
        scale *= s
        int_rows.append([int(v * s) for v in values])
    a = int_rows
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale
