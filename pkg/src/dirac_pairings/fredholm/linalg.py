"""Exact rational matrices and the subspace operations the index calculus needs.

Subspaces are carried as matrices whose columns form a basis. Every function here
tolerates empty spaces (zero rows or zero columns).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from sympy import Matrix, Rational, eye, zeros

from dirac_pairings.errors import DatumLoadError, ShapeMismatch


def _entry(value: object) -> Rational:
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Rational(value.strip())
        except (TypeError, ValueError) as e:
            raise DatumLoadError(f"Not a rational number: {value!r}") from e
    return Rational(value)


def exact_matrix(rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
    """Build a rational matrix from nested rows of ints, Fractions or "p/q" strings.

    ``cols`` fixes the width of a matrix with no rows.
    """
    if not rows:
        return zeros(0, cols or 0)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ShapeMismatch("Ragged matrix rows")
    return Matrix([[_entry(x) for x in r] for r in rows])


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return m.rank()


def nullity(m: Matrix) -> int:
    return m.cols - rank(m)


def kernel(m: Matrix) -> Matrix:
    """Basis of ker m as columns."""
    if m.cols == 0:
        return zeros(0, 0)
    if m.rows == 0:
        return eye(m.cols)
    return Matrix.hstack(zeros(m.cols, 0), *m.nullspace())


def image(m: Matrix) -> Matrix:
    """Basis of Im m as columns."""
    basis = m.columnspace() if m.rows and m.cols else []
    return Matrix.hstack(zeros(m.rows, 0), *basis)


def cokernel_rows(m: Matrix) -> Matrix:
    """Rows spanning the linear forms that vanish on Im m."""
    return kernel(m.T).T


def span_dim(*bases: Matrix) -> int:
    return rank(Matrix.hstack(*bases))


def intersection_dim(a: Matrix, b: Matrix) -> int:
    """dim(span a ∩ span b) = rank a + rank b - rank [a | b]."""
    return rank(a) + rank(b) - span_dim(a, b)


def complement(basis: Matrix, dim: int) -> Matrix:
    """Standard basis vectors completing the columns of ``basis`` to a basis of Q^dim."""
    current = image(basis) if basis.cols else zeros(dim, 0)
    chosen = []
    for j in range(dim):
        e = eye(dim)[:, j]
        if rank(Matrix.hstack(current, e)) > current.cols:
            current = Matrix.hstack(current, e)
            chosen.append(e)
    return Matrix.hstack(zeros(dim, 0), *chosen)


def quotient_map(basis: Matrix, dim: int) -> tuple[Matrix, Matrix]:
    """Projection Q^dim -> Q^dim / span(basis), and a section back into Q^dim.

    The quotient is identified with the span of the complement returned by
    ``complement``; the section sends a class to that representative.
    """
    sub = image(basis) if basis.cols else zeros(dim, 0)
    section = complement(sub, dim)
    if dim == 0:
        return zeros(0, 0), zeros(0, 0)
    change = Matrix.hstack(sub, section).inv()
    projection = change[sub.cols :, :]
    return projection, section


def block_diagonal(blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        if b.rows and b.cols:
            out[r : r + b.rows, c : c + b.cols] = b
        r += b.rows
        c += b.cols
    return out


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for x in m)
