"""Spinors S = ∧U as a Clifford module, and the spin map k -> so(p) -> C(p)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from sympy import Matrix, Rational, diag, eye, zeros

from dirac_pairings.errors import CliffordRelationFailed, IdentityFailed
from dirac_pairings.lab.algebra import LabAlgebra

logger = logging.getLogger(__name__)

Subset = tuple[int, ...]


def subsets(m: int) -> list[Subset]:
    """Increasing index tuples of [0, m), by size then lexicographically."""
    return [c for r in range(m + 1) for c in combinations(range(m), r)]


def wedge_in_front(i: int, subset: Subset) -> tuple[int, Subset]:
    """v_i ∧ v_subset = sign · v_{subset ∪ i}; sign 0 when i is already present."""
    if i in subset:
        return 0, subset
    before = sum(1 for k in subset if k < i)
    return (-1) ** before, tuple(sorted(subset + (i,)))


def drop_position(subset: Subset, position: int) -> Subset:
    return subset[:position] + subset[position + 1 :]


@dataclass(frozen=True, eq=False)
class SpinorMatrices:
    """gamma(u_i) (wedge) and gamma(u*_i) (2 x contraction) on ∧U, plus the grading."""

    algebra: LabAlgebra
    basis: tuple[Subset, ...]
    gamma_u: tuple[Matrix, ...]
    gamma_u_star: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def position(self, subset: Subset) -> int:
        return self.basis.index(subset)

    def parity(self, subset: Subset) -> int:
        return len(subset) % 2

    @cached_property
    def grading(self) -> Matrix:
        """+1 on S+ = ∧^even U, -1 on S- = ∧^odd U."""
        return diag(*[(-1) ** len(s) for s in self.basis])

    @cached_property
    def weights(self) -> tuple[tuple[int, ...], ...]:
        """-rho_n plus the roots of U in the subset."""
        a = self.algebra
        out = []
        for s in self.basis:
            w = [-a.rho[k] + sum((a.u_weights[i][k] for i in s), Rational(0)) for k in range(a.rank)]
            out.append(tuple(int(c) for c in w))
        return tuple(out)

    def gamma(self, v: Matrix) -> Matrix:
        """gamma(v) for any v in p, linear in v."""
        a_coords, b_coords = self.algebra.p_dual(v)
        out = zeros(self.dim, self.dim)
        for i in range(self.algebra.m):
            out += a_coords[i] * self.gamma_u[i] + b_coords[i] * self.gamma_u_star[i]
        return out

    def spin_map(self, z: Matrix) -> Matrix:
        """alpha(Z) = -1/4 sum_i gamma([Z, Y_i]) gamma(Z_i), Z_i the B-dual of Y_i in p."""
        a = self.algebra
        p = a.p_basis
        duals = p[a.m :] + p[: a.m]
        out = zeros(self.dim, self.dim)
        for y, dual in zip(p, duals, strict=True):
            out += self.gamma(a.bracket(z, y)) * self.gamma(dual)
        return -out / 4


def _wedge_matrix(basis: list[Subset], i: int) -> Matrix:
    m = zeros(len(basis), len(basis))
    for col, s in enumerate(basis):
        sign, target = wedge_in_front(i, s)
        if sign:
            m[basis.index(target), col] = sign
    return m


def _contraction_matrix(basis: list[Subset], i: int) -> Matrix:
    """2 sum_j (-1)^j B(u*_i, lambda_j) lambda_1..^j..lambda_r, j counted from 1."""
    m = zeros(len(basis), len(basis))
    for col, s in enumerate(basis):
        if i not in s:
            continue
        j = s.index(i) + 1
        m[basis.index(drop_position(s, j - 1)), col] = 2 * (-1) ** j
    return m


def build_spinor_matrices(algebra: LabAlgebra) -> SpinorMatrices:
    """Spinor matrices on ∧U, checked against vw + wv = -2B(v, w) and the K-weights."""
    basis = subsets(algebra.m)
    spinors = SpinorMatrices(
        algebra,
        tuple(basis),
        tuple(_wedge_matrix(basis, i) for i in range(algebra.m)),
        tuple(_contraction_matrix(basis, i) for i in range(algebra.m)),
    )
    check_clifford_relation(spinors)
    for k, c in enumerate(algebra.cartan):
        alpha = spinors.spin_map(algebra.unit(c))
        expected = diag(*[w[k] for w in spinors.weights])
        if alpha != expected:
            raise IdentityFailed(
                f"Spin map of {algebra.basis[c]} is not diagonal with the spinor weights",
                str(alpha.tolist()),
            )
    logger.debug("Spinors for %s: dim %d, weights %s", algebra.name, spinors.dim, spinors.weights)
    return spinors


def check_clifford_relation(spinors: SpinorMatrices) -> None:
    a = spinors.algebra
    p = a.p_basis
    one = eye(spinors.dim)
    for i, v in enumerate(p):
        for w in p[i:]:
            gv, gw = spinors.gamma(v), spinors.gamma(w)
            if gv * gw + gw * gv != -2 * a.b(v, w) * one:
                raise CliffordRelationFailed(
                    "gamma(v)gamma(w) + gamma(w)gamma(v) != -2B(v, w)",
                    f"v = {list(v)}, w = {list(w)}",
                )
