"""Lie algebra data for the explicit matrix lab.

The lab works with a complex reductive g = k ⊕ p whose compact part k is the
Cartan subalgebra spanned by ``cartan`` (abelian K), with p = U ⊕ U* split by the
positive noncompact roots of the reference chamber. Weights are eigenvalue vectors
on the Cartan basis, which for sl(2) are the doubled coordinates of the weight layer.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from sympy import Matrix, Rational, zeros

from dirac_pairings.errors import InvalidRootSystem, UsageError

logger = logging.getLogger(__name__)

LabWeight = tuple[Rational, ...]


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, row index (i, k) -> i * b.rows + k."""
    return Matrix(
        a.rows * b.rows,
        a.cols * b.cols,
        lambda i, j: a[i // b.rows, j // b.cols] * b[i % b.rows, j % b.cols],
    )


@dataclass(frozen=True, eq=False)
class LabAlgebra:
    """g with a basis, the invariant form B, brackets and the k / U / U* roles."""

    name: str
    basis: tuple[str, ...]
    form: Matrix
    brackets: dict[tuple[int, int], tuple[Rational, ...]]
    cartan: tuple[int, ...]
    u_basis: tuple[int, ...]
    u_dual_basis: tuple[int, ...]
    root_of: dict[int, LabWeight] = field(default_factory=dict)
    datum_name: str = "sl2R"

    def __post_init__(self):
        if self.form.shape != (len(self.basis), len(self.basis)) or self.form != self.form.T:
            raise InvalidRootSystem("Invariant form must be a symmetric square matrix")
        if self.form.det() == 0:
            raise InvalidRootSystem("Invariant form is degenerate")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def m(self) -> int:
        """dim U = dim p / 2."""
        return len(self.u_basis)

    def index(self, name: str) -> int:
        return self.basis.index(name)

    def unit(self, i: int) -> Matrix:
        v = zeros(self.dim, 1)
        v[i] = 1
        return v

    def bracket(self, a: Matrix, b: Matrix) -> Matrix:
        out = zeros(self.dim, 1)
        for i in range(self.dim):
            if a[i] == 0:
                continue
            for j in range(self.dim):
                if b[j] == 0:
                    continue
                out += a[i] * b[j] * self._bracket_unit(i, j)
        return out

    def _bracket_unit(self, i: int, j: int) -> Matrix:
        if (i, j) in self.brackets:
            return Matrix(self.brackets[(i, j)])
        if (j, i) in self.brackets:
            return -Matrix(self.brackets[(j, i)])
        return zeros(self.dim, 1)

    def b(self, a: Matrix, c: Matrix) -> Rational:
        return (a.T * self.form * c)[0, 0]

    @cached_property
    def dual_basis(self) -> list[Matrix]:
        """Y^i with B(Y_i, Y^j) = delta_ij."""
        inverse = self.form.inv()
        return [inverse[:, i] for i in range(self.dim)]

    @cached_property
    def p_basis(self) -> list[Matrix]:
        """u_1..u_m followed by u*_1..u*_m, the u*_i B-dual to the u_i."""
        us = [self.unit(i) for i in self.u_basis]
        pairing = Matrix(self.m, self.m, lambda i, j: self.b(us[i], self.unit(self.u_dual_basis[j])))
        if pairing.det() == 0:
            raise InvalidRootSystem("U and U* are not in duality under B")
        coefficients = pairing.inv()
        stars = []
        for i in range(self.m):
            v = zeros(self.dim, 1)
            for j in range(self.m):
                v += coefficients[j, i] * self.unit(self.u_dual_basis[j])
            stars.append(v)
        return us + stars

    def p_dual(self, v: Matrix) -> tuple[list[Rational], list[Rational]]:
        """Coordinates (a, b) of v in p with v = sum a_i u_i + b_i u*_i."""
        p = self.p_basis
        a = [self.b(v, p[self.m + i]) for i in range(self.m)]
        b = [self.b(v, p[i]) for i in range(self.m)]
        return a, b

    @cached_property
    def cartan_form(self) -> Matrix:
        return Matrix(self.rank, self.rank, lambda i, j: self.form[self.cartan[i], self.cartan[j]])

    def norm2(self, weight: Sequence[Rational]) -> Rational:
        """|lambda|^2 for a weight given by its eigenvalues on the Cartan basis."""
        v = Matrix(list(weight))
        return (v.T * self.cartan_form.inv() * v)[0, 0]

    @cached_property
    def u_weights(self) -> list[LabWeight]:
        return [self.root_of[i] for i in self.u_basis]

    @cached_property
    def rho(self) -> LabWeight:
        """Half the sum of the roots of U; with abelian k these are all positive roots."""
        return tuple(sum((w[k] for w in self.u_weights), Rational(0)) / 2 for k in range(self.rank))

    @property
    def rho_k(self) -> LabWeight:
        return tuple(Rational(0) for _ in range(self.rank))

    def scaled(self, t2: Rational | int) -> LabAlgebra:
        """The same algebra with B replaced by t^2 B."""
        return LabAlgebra(
            f"{self.name}*{t2}",
            self.basis,
            self.form * Rational(t2),
            self.brackets,
            self.cartan,
            self.u_basis,
            self.u_dual_basis,
            self.root_of,
            self.datum_name,
        )


def sl2_algebra() -> LabAlgebra:
    """sl(2, C) with k = C h, p = C e ⊕ C f and the trace form B(h,h) = 2, B(e,f) = 1."""
    two = Rational(2)
    return LabAlgebra(
        name="sl2R",
        basis=("h", "e", "f"),
        form=Matrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]]),
        brackets={
            (0, 1): (0, two, 0),
            (0, 2): (0, 0, -two),
            (1, 2): (1, 0, 0),
        },
        cartan=(0,),
        u_basis=(1,),
        u_dual_basis=(2,),
        root_of={1: (two,), 2: (-two,)},
    )


_ALGEBRAS = {"sl2R": sl2_algebra}


def lab_algebra(name: str = "sl2R") -> LabAlgebra:
    if name not in _ALGEBRAS:
        raise UsageError(f"The lab ships matrix models for {', '.join(_ALGEBRAS)} only, not {name!r}")
    return _ALGEBRAS[name]()
