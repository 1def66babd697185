"""Seeded random instances for the index suites."""

from __future__ import annotations

import random

from sympy import Matrix, eye, zeros

from dirac_pairings.fredholm.complexes import GradedComplexData
from dirac_pairings.fredholm.linalg import block_diagonal, cokernel_rows, kernel
from dirac_pairings.fredholm.pairs import FredholmPairData
from dirac_pairings.fredholm.perturbation import SuperOperator
from dirac_pairings.fredholm.sequences import ExtensionDiagram

ENTRY_RANGE = 3


def random_matrix(rng: random.Random, rows: int, cols: int, max_rank: int | None = None) -> Matrix:
    """Integer matrix of rank at most ``max_rank`` (a product through a thin middle)."""
    if max_rank is None:
        max_rank = rng.randint(0, min(rows, cols))
    if max_rank == 0:
        return zeros(rows, cols)
    left = Matrix(rows, max_rank, lambda i, j: rng.randint(-ENTRY_RANGE, ENTRY_RANGE))
    right = Matrix(max_rank, cols, lambda i, j: rng.randint(-ENTRY_RANGE, ENTRY_RANGE))
    return left * right


def random_pair(rng: random.Random, max_dim: int = 6) -> FredholmPairData:
    x, y = rng.randint(0, max_dim), rng.randint(0, max_dim)
    return FredholmPairData(random_matrix(rng, y, x), random_matrix(rng, x, y))


def _through(rng: random.Random, left: Matrix, right: Matrix) -> Matrix:
    """left · R · right for a random R, zero when either factor is empty."""
    if left.cols == 0 or right.rows == 0:
        return zeros(left.rows, right.cols)
    middle = Matrix(left.cols, right.rows, lambda i, j: rng.randint(-ENTRY_RANGE, ENTRY_RANGE))
    return left * middle * right


def random_st_zero_pair(
    rng: random.Random, max_dim: int = 6, dims: tuple[int, int] | None = None
) -> FredholmPairData:
    """S random, T = K·R·N with K spanning ker S and N killing Im S, so ST = 0 = TS."""
    x, y = dims or (rng.randint(0, max_dim), rng.randint(0, max_dim))
    s = random_matrix(rng, y, x)
    t = _through(rng, kernel(s), cokernel_rows(s))
    return FredholmPairData(s, t)


def random_complex(rng: random.Random, length: int = 4, max_dim: int = 6) -> GradedComplexData:
    dims = tuple(rng.randint(0, max_dim) for _ in range(length))
    differentials: list[Matrix] = []
    for i in range(length - 1):
        if not differentials:
            d = random_matrix(rng, dims[i + 1], dims[i])
        else:
            # rows of d^i must annihilate Im d^{i-1}
            forms = cokernel_rows(differentials[-1])
            d = _through(rng, eye(dims[i + 1]), forms) if forms.rows else zeros(dims[i + 1], dims[i])
        differentials.append(d)
    return GradedComplexData(dims, tuple(differentials))


def _shear(top: int, bottom: int, h: Matrix) -> Matrix:
    """[[1, H], [0, 1]] on Q^top ⊕ Q^bottom."""
    m = eye(top + bottom)
    if top and bottom:
        m[:top, top:] = h
    return m


def _inclusion_projection(first: int, last: int) -> tuple[Matrix, Matrix]:
    inclusion = zeros(first + last, first)
    projection = zeros(last, first + last)
    if first:
        inclusion[:first, :] = eye(first)
    if last:
        projection[:, first:] = eye(last)
    return inclusion, projection


def extension_diagram(
    rng: random.Random, max_dim: int = 4, split: bool = False
) -> ExtensionDiagram:
    """pair₂ = pair₁ ⊕ pair₃ conjugated by shears on X and Y; ``split`` skips the shears."""
    p1 = random_st_zero_pair(rng, max_dim)
    p3 = random_st_zero_pair(rng, max_dim)
    x1, y1, x3, y3 = p1.dim_x, p1.dim_y, p3.dim_x, p3.dim_y
    h_x = zeros(x1, x3) if split else random_matrix(rng, x1, x3)
    h_y = zeros(y1, y3) if split else random_matrix(rng, y1, y3)
    s2 = _shear(y1, y3, h_y) * block_diagonal([p1.s, p3.s]) * _shear(x1, x3, -h_x)
    t2 = _shear(x1, x3, h_x) * block_diagonal([p1.t, p3.t]) * _shear(y1, y3, -h_y)
    alpha, beta = _inclusion_projection(x1, x3)
    gamma, delta = _inclusion_projection(y1, y3)
    return ExtensionDiagram((p1, FredholmPairData(s2, t2), p3), alpha, beta, gamma, delta)


def perturbation_pair(rng: random.Random, max_dim: int = 5) -> tuple[SuperOperator, SuperOperator]:
    """Random odd d and ∂ with d² = 0 = ∂² on one super space."""
    p, q = rng.randint(0, max_dim), rng.randint(0, max_dim)

    def odd_square_zero() -> SuperOperator:
        pair = random_st_zero_pair(rng, dims=(p, q))
        m = zeros(p + q, p + q)
        if p and q:
            m[p:, :p] = pair.s
            m[:p, p:] = pair.t
        return SuperOperator(p, q, m)

    return odd_square_zero(), odd_square_zero()
