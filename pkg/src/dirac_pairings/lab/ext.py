"""The relative Lie algebra cochain complex Hom_K(∧^i p ⊗ X, Y)."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from itertools import product

from sympy import Matrix, zeros

from dirac_pairings.errors import IdentityFailed
from dirac_pairings.fredholm.complexes import GradedComplexData, cohomology_dims, euler_via_pair
from dirac_pairings.lab.clifford import SpinorMatrices, Subset, drop_position
from dirac_pairings.lab.homspaces import HomSpace, hom_space
from dirac_pairings.lab.modules import MatrixHCModule

logger = logging.getLogger(__name__)

Blocks = dict[tuple[Subset, Subset], Matrix]


def to_blocks(space: HomSpace, coords: Matrix) -> Blocks:
    """phi as its blocks phi_{I,J}: X -> Y, x -> phi(lambda_I ∧ mu_J ⊗ x)."""
    basis = space.spinors.basis
    blocks = {key: zeros(space.y.dim, space.x.dim) for key in product(basis, basis)}
    for k, u in enumerate(space.units):
        blocks[(u.i, u.j)][u.y, u.x] += coords[k]
    return blocks


def from_blocks(space: HomSpace, blocks: Blocks) -> Matrix:
    coords = zeros(space.dim, 1)
    seen = set()
    for k, u in enumerate(space.units):
        coords[k] = blocks[(u.i, u.j)][u.y, u.x]
        seen.add((u.i, u.j, u.y, u.x))
    for (i, j), m in blocks.items():
        for row in range(m.rows):
            for col in range(m.cols):
                if m[row, col] != 0 and (i, j, row, col) not in seen:
                    raise IdentityFailed("Cochain operator left the K-equivariant cochains")
    return coords


def cochain_operator(space: HomSpace, fn: Callable[[Blocks], Blocks]) -> Matrix:
    """Matrix of a linear map on cochains in unit coordinates."""
    out = zeros(space.dim, space.dim)
    for k in range(space.dim):
        unit = zeros(space.dim, 1)
        unit[k] = 1
        out[:, k] = from_blocks(space, fn(to_blocks(space, unit)))
    return out


def ext_differential(space: HomSpace) -> Callable[[Blocks], Blocks]:
    """d phi(X_0 ∧ .. ∧ X_i ⊗ x) = sum_j (-1)^j (X_j phi(..^j.. ⊗ x) - phi(..^j.. ⊗ X_j x)).

    The X_j run through lambda_I then mu_J, counted from 0.
    """
    a = space.spinors.algebra
    p = a.p_basis
    pi_x = [space.x.act(v) for v in p]
    pi_y = [space.y.act(v) for v in p]

    def apply(phi: Blocks) -> Blocks:
        out: Blocks = {}
        for (i_set, j_set), block in phi.items():
            total = zeros(*block.shape)
            vectors = list(i_set) + [a.m + j for j in j_set]
            for pos, v in enumerate(vectors):
                if pos < len(i_set):
                    sub = (drop_position(i_set, pos), j_set)
                else:
                    sub = (i_set, drop_position(j_set, pos - len(i_set)))
                total += (-1) ** pos * (pi_y[v] * phi[sub] - phi[sub] * pi_x[v])
            out[(i_set, j_set)] = total
        return out

    return apply


@dataclass(frozen=True, eq=False)
class ExtComplex:
    space: HomSpace
    complex: GradedComplexData
    differential: Matrix
    euler: int

    @property
    def dims(self) -> list[int]:
        return list(self.complex.dims)

    @property
    def cohomology(self) -> list[int]:
        return cohomology_dims(self.complex)


def ext_complex(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> ExtComplex:
    """C^i = Hom_K(∧^i p ⊗ X, Y) with its differential.

    The Euler characteristic is checked three ways: pair index, cohomology, dimensions.
    """
    space = hom_space(x, y, spinors)
    full = cochain_operator(space, ext_differential(space))
    degrees = [space.of_degree(k) for k in range(2 * spinors.algebra.m + 1)]
    differentials = tuple(
        full.extract(degrees[k + 1], degrees[k]) if degrees[k + 1] and degrees[k]
        else zeros(len(degrees[k + 1]), len(degrees[k]))
        for k in range(len(degrees) - 1)
    )
    cochains = GradedComplexData(tuple(len(d) for d in degrees), differentials)
    result = ExtComplex(space, cochains, full, euler_via_pair(cochains))
    logger.debug("Ext complex %s -> %s: C %s, H %s", x.name, y.name, result.dims, result.cohomology)
    return result
