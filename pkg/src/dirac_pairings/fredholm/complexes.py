"""Finite cochain complexes as Fredholm pairs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from sympy import Matrix, zeros

from dirac_pairings.errors import IdentityFailed, NotAComplex, ShapeMismatch
from dirac_pairings.fredholm.linalg import is_zero, nullity, rank
from dirac_pairings.fredholm.pairs import FredholmPairData, fredholm_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedComplexData:
    """0 -> C^0 -> C^1 -> ... -> C^n -> 0 with d^i: C^i -> C^{i+1}."""

    dims: tuple[int, ...]
    differentials: tuple[Matrix, ...] = field(default=())

    def __post_init__(self):
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise ShapeMismatch(
                f"{len(self.dims)} spaces need {len(self.dims) - 1} differentials, "
                f"got {len(self.differentials)}"
            )
        for i, d in enumerate(self.differentials):
            if (d.rows, d.cols) != (self.dims[i + 1], self.dims[i]):
                raise ShapeMismatch(
                    f"d^{i} is {d.rows}x{d.cols}, expected {self.dims[i + 1]}x{self.dims[i]}"
                )
        for i in range(len(self.differentials) - 1):
            if not is_zero(self.differentials[i + 1] * self.differentials[i]):
                raise NotAComplex(f"d^{i + 1} d^{i} != 0")

    def differential(self, i: int) -> Matrix:
        """d^i, with the zero maps at both ends."""
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        source = self.dims[i] if 0 <= i < len(self.dims) else 0
        target = self.dims[i + 1] if 0 <= i + 1 < len(self.dims) else 0
        return zeros(target, source)


def cohomology_dims(c: GradedComplexData) -> list[int]:
    """dim H^i = nullity d^i - rank d^{i-1}."""
    return [nullity(c.differential(i)) - rank(c.differential(i - 1)) for i in range(len(c.dims))]


def complex_to_pair(c: GradedComplexData) -> FredholmPairData:
    """S = ⊕ d^even : C^even -> C^odd and T = ⊕ d^odd : C^odd -> C^even."""
    offsets: dict[int, int] = {}
    totals = [0, 0]
    for i, n in enumerate(c.dims):
        offsets[i] = totals[i % 2]
        totals[i % 2] += n
    dim_x, dim_y = totals
    s, t = zeros(dim_y, dim_x), zeros(dim_x, dim_y)
    for i, d in enumerate(c.differentials):
        if not (d.rows and d.cols):
            continue
        target = s if i % 2 == 0 else t
        row, col = offsets[i + 1], offsets[i]
        target[row : row + d.rows, col : col + d.cols] = d
    return FredholmPairData(s, t)


def euler_via_pair(c: GradedComplexData) -> int:
    """Index of the folded pair; asserted equal to both Euler characteristics."""
    index = fredholm_index(complex_to_pair(c)).index
    homological = sum((-1) ** i * h for i, h in enumerate(cohomology_dims(c)))
    dimensional = sum((-1) ** i * n for i, n in enumerate(c.dims))
    if not index == homological == dimensional:
        raise IdentityFailed(
            "Folded index differs from the Euler characteristic",
            f"index {index}, cohomology {homological}, dimensions {dimensional}",
        )
    logger.debug("Complex %s: Euler characteristic %d", c.dims, index)
    return index
