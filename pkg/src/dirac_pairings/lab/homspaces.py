"""Hom_K~(X ⊗ S, Y ⊗ S) and the Fredholm pair (S, T) on it.

Both this space and Hom_K(∧p ⊗ X, Y) are spanned by the same weight-matched units
(y, I, J, x): in the first, the matrix unit sending x ⊗ lambda_I to y ⊗ lambda_J; in
the second, the cochain sending lambda_I ∧ mu_J ⊗ x to y. The two are identified by
phi = (-2)^{|J|} psi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from sympy import Matrix, diag, zeros

from dirac_pairings.errors import IdentityFailed
from dirac_pairings.fredholm.linalg import rank
from dirac_pairings.fredholm.pairs import FredholmIndex, FredholmPairData, fredholm_index
from dirac_pairings.lab.clifford import SpinorMatrices, Subset
from dirac_pairings.lab.dirac import dirac_cohomology, dirac_matrix
from dirac_pairings.lab.modules import MatrixHCModule
from dirac_pairings.spin import dirac_pairing, spinor_modules
from dirac_pairings.weights import build_root_datum, pair, tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class HomUnit:
    degree: int
    i: Subset
    j: Subset
    y: int
    x: int

    @property
    def parity(self) -> int:
        return self.degree % 2


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Weight-matched units for a pair of modules, ordered by degree."""

    x: MatrixHCModule
    y: MatrixHCModule
    spinors: SpinorMatrices
    units: tuple[HomUnit, ...]

    @cached_property
    def position(self) -> dict[HomUnit, int]:
        return {u: k for k, u in enumerate(self.units)}

    @property
    def dim(self) -> int:
        return len(self.units)

    def of_degree(self, degree: int) -> list[int]:
        return [k for k, u in enumerate(self.units) if u.degree == degree]

    @property
    def even(self) -> list[int]:
        return [k for k, u in enumerate(self.units) if u.parity == 0]

    @property
    def odd(self) -> list[int]:
        return [k for k, u in enumerate(self.units) if u.parity == 1]

    @cached_property
    def transport(self) -> Matrix:
        """Theta with phi = Theta psi in unit coordinates."""
        return diag(*[(-2) ** len(u.j) for u in self.units]) if self.units else zeros(0, 0)

    def dims_by_degree(self) -> list[int]:
        return [len(self.of_degree(k)) for k in range(2 * self.spinors.algebra.m + 1)]

    # matrix picture: psi as a (dim Y ⊗ S) x (dim X ⊗ S) matrix
    def to_big(self, coords: Matrix) -> Matrix:
        s = self.spinors
        out = zeros(self.y.dim * s.dim, self.x.dim * s.dim)
        for k, u in enumerate(self.units):
            out[u.y * s.dim + s.position(u.j), u.x * s.dim + s.position(u.i)] += coords[k]
        return out

    def from_big(self, big: Matrix) -> Matrix:
        s = self.spinors
        coords = zeros(self.dim, 1)
        seen = set()
        for k, u in enumerate(self.units):
            row, col = u.y * s.dim + s.position(u.j), u.x * s.dim + s.position(u.i)
            coords[k] = big[row, col]
            seen.add((row, col))
        for row in range(big.rows):
            for col in range(big.cols):
                if big[row, col] != 0 and (row, col) not in seen:
                    raise IdentityFailed("Operator left the K~-equivariant maps")
        return coords

    def operator(self, fn, rows: list[int], cols: list[int]) -> Matrix:
        """Matrix of a linear map on big matrices, restricted to the given unit indices."""
        out = zeros(len(rows), len(cols))
        for c, k in enumerate(cols):
            unit = zeros(self.dim, 1)
            unit[k] = 1
            image = self.from_big(fn(self.to_big(unit)))
            for r, row in enumerate(rows):
                out[r, c] = image[row]
        return out


def hom_space(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> HomSpace:
    """Units (y, I, J, x) with wt(x) + wt(lambda_I) = wt(y) + wt(lambda_J)."""
    s = spinors
    units = []
    for i_set, wi in zip(s.basis, s.weights, strict=True):
        for j_set, wj in zip(s.basis, s.weights, strict=True):
            for xi, wx in enumerate(x.weights):
                for yi, wy in enumerate(y.weights):
                    if all(a + b == c + d for a, b, c, d in zip(wx, wi, wy, wj, strict=True)):
                        units.append(HomUnit(len(i_set) + len(j_set), i_set, j_set, yi, xi))
    space = HomSpace(x, y, spinors, tuple(sorted(units)))
    _check_dimension(space)
    return space


def _check_dimension(space: HomSpace) -> None:
    """dim Hom_K~(X ⊗ S, Y ⊗ S) from the character calculus of the weight layer."""
    datum = build_root_datum(space.spinors.algebra.datum_name)
    spinors = spinor_modules(datum)
    full = spinors.s_plus + spinors.s_minus
    left = tensor(datum, space.x.k_character(), full)
    right = tensor(datum, space.y.k_character(), full)
    expected = pair(left, right)
    if expected != space.dim:
        raise IdentityFailed("Hom space dimension differs from the character pairing", f"{space.dim} vs {expected}")


@dataclass(frozen=True, eq=False)
class STPair:
    """S: Hom^0 -> Hom^1 and T: Hom^1 -> Hom^0 in unit coordinates."""

    space: HomSpace
    s: Matrix
    t: Matrix
    d_x: Matrix
    d_y: Matrix

    @property
    def pair(self) -> FredholmPairData:
        return FredholmPairData(self.s, self.t)

    @cached_property
    def full(self) -> Matrix:
        """S ⊕ T as one odd operator on all units, in the order of ``space.units``."""
        out = zeros(self.space.dim, self.space.dim)
        even, odd = self.space.even, self.space.odd
        for r, row in enumerate(odd):
            for c, col in enumerate(even):
                out[row, col] = self.s[r, c]
        for r, row in enumerate(even):
            for c, col in enumerate(odd):
                out[row, col] = self.t[r, c]
        return out


def build_ST(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> STPair:
    """S phi = D_Y ε phi - phi D_X and T psi = -D_Y ε psi - psi D_X."""
    space = hom_space(x, y, spinors)
    d_x, d_y = dirac_matrix(x, spinors), dirac_matrix(y, spinors)
    grading = _grading(y.dim, spinors)
    s = space.operator(lambda m: d_y * grading * m - m * d_x, space.odd, space.even)
    t = space.operator(lambda m: -d_y * grading * m - m * d_x, space.even, space.odd)
    return STPair(space, s, t, d_x, d_y)


def _grading(dim: int, spinors: SpinorMatrices) -> Matrix:
    return diag(*([spinors.grading[k, k] for k in range(spinors.dim)] * dim))


@dataclass(frozen=True)
class STReport:
    x: str
    y: str
    hom_dims: tuple[int, int]
    index: FredholmIndex
    dirac_pairing: int
    same_infinitesimal_character: bool
    checks: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "X": self.x,
            "Y": self.y,
            "hom_dims": list(self.hom_dims),
            "a": self.index.a,
            "b": self.index.b,
            "index": self.index.index,
            "dirac_pairing": self.dirac_pairing,
            "checks": self.checks,
            "holds": self.holds,
        }


def index_ST(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> STReport:
    """ind(S, T) against <X, Y>_Dir, with the square and semisimplicity identities.

    When X and Y share the infinitesimal character, the kernel quotients a and b
    are also compared with the Hom dimensions between Dirac cohomologies.
    """
    st = build_ST(x, y, spinors)
    space = st.space
    checks: dict[str, bool] = {}

    even, odd = space.even, space.odd
    square_x, square_y = st.d_x**2, st.d_y**2
    squares = space.operator(lambda m: square_y * m + m * square_x, even, even)
    checks["TS = D²φ + φD²"] = st.t * st.s == squares
    squares_odd = space.operator(lambda m: square_y * m + m * square_x, odd, odd)
    checks["ST = D²ψ + ψD²"] = st.s * st.t == squares_odd
    ts = st.t * st.s
    checks["ker TS ⊕ Im TS"] = rank(ts) == rank(ts * ts)

    index = fredholm_index(st.pair)
    hx, hy = dirac_cohomology(x, spinors), dirac_cohomology(y, spinors)
    value = dirac_pairing(hx.index, hy.index)
    same = x.infinitesimal_character == y.infinitesimal_character
    checks["ind(S, T) = <X, Y>_Dir"] = index.index == value
    if same:
        a = sum(n * hy.plus.get(w, 0) for w, n in hx.plus.items()) + sum(
            n * hy.minus.get(w, 0) for w, n in hx.minus.items()
        )
        b = sum(n * hy.minus.get(w, 0) for w, n in hx.plus.items()) + sum(
            n * hy.plus.get(w, 0) for w, n in hx.minus.items()
        )
        checks["a = dim Hom(H+, H+) + dim Hom(H-, H-)"] = index.a == a
        checks["b = dim Hom(H+, H-) + dim Hom(H-, H+)"] = index.b == b
    report = STReport(
        x.name, y.name, (len(even), len(odd)), index, value, same, checks
    )
    if not report.holds:
        logger.warning("(S, T) identities failed for %s, %s: %s", x.name, y.name, checks)
    return report
