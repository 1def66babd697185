"""Index of a perturbed differential F = d + ∂ on a finite super vector space."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from sympy import Matrix

from dirac_pairings.errors import NotAComplex, SemisimplicityFails, ShapeMismatch
from dirac_pairings.fredholm.linalg import is_zero, matrix_to_json, nullity, rank
from dirac_pairings.fredholm.pairs import FredholmPairData, fredholm_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuperOperator:
    """An odd operator on V = V⁰ ⊕ V¹, stored as a full square matrix."""

    even_dim: int
    odd_dim: int
    matrix: Matrix

    def __post_init__(self):
        n = self.even_dim + self.odd_dim
        if self.matrix.shape != (n, n):
            raise ShapeMismatch(f"Operator is {self.matrix.shape}, expected {n}x{n}")
        p = self.even_dim
        if not (is_zero(self.matrix[:p, :p]) and is_zero(self.matrix[p:, p:])):
            raise ShapeMismatch("Operator is not odd for the grading")

    @property
    def plus(self) -> Matrix:
        """V⁰ -> V¹."""
        return self.matrix[self.even_dim :, : self.even_dim]

    @property
    def minus(self) -> Matrix:
        """V¹ -> V⁰."""
        return self.matrix[: self.even_dim, self.even_dim :]

    def as_pair(self) -> FredholmPairData:
        return FredholmPairData(self.plus, self.minus)

    def __add__(self, other: SuperOperator) -> SuperOperator:
        if (self.even_dim, self.odd_dim) != (other.even_dim, other.odd_dim):
            raise ShapeMismatch("Operators on different super spaces")
        return SuperOperator(self.even_dim, self.odd_dim, self.matrix + other.matrix)

    def to_json(self) -> dict[str, Any]:
        return {"grading": [self.even_dim, self.odd_dim], "matrix": matrix_to_json(self.matrix)}


@dataclass(frozen=True)
class PerturbationReport:
    grading: tuple[int, int]
    index_f: int
    index_d: int
    kernel_index: int

    @property
    def holds(self) -> bool:
        return self.index_f == self.index_d

    def to_json(self) -> dict[str, Any]:
        return {
            "grading": list(self.grading),
            "ind_F": self.index_f,
            "ind_d": self.index_d,
            "ker_F2_index": self.kernel_index,
            "holds": self.holds,
        }


def is_semisimple(f: Matrix) -> bool:
    """ker F² ⊕ Im F² = V, i.e. rank F² = rank F⁴."""
    square = f * f
    return rank(square) == rank(square * square)


def perturbed_index(d: SuperOperator, partial: SuperOperator) -> PerturbationReport:
    """ind(F⁺, F⁻) against ind(d⁺, d⁻) for F = d + ∂."""
    if not is_zero(d.matrix * d.matrix):
        raise NotAComplex("d² != 0")
    if not is_zero(partial.matrix * partial.matrix):
        raise NotAComplex("∂² != 0")
    f = d + partial
    if not is_semisimple(f.matrix):
        raise SemisimplicityFails("ker F² and Im F² do not span V")

    square = f.matrix * f.matrix
    p = f.even_dim
    kernel_index = nullity(square[:p, :p]) - nullity(square[p:, p:])
    report = PerturbationReport(
        (d.even_dim, d.odd_dim),
        fredholm_index(f.as_pair()).index,
        fredholm_index(d.as_pair()).index,
        kernel_index,
    )
    logger.debug("Perturbed index on %s: %s", report.grading, report.to_json())
    return report
