"""Splitting the Dirac action on cochains into the Ext differential and its perturbation.

With phi in Hom_K(∧p ⊗ X, Y) evaluated on lambda_I ∧ mu_J ⊗ x (r = |I|), the action
of D = A + B expands into eight operators:

    A1 = 2d1 = E1    A2 = δ1 = D1    A3 = 2d2 = D2    A4 = δ2 = E2
    B1 = δ3 = E3     B2 = 2d3 = D3   B3 = δ4 = D4     B4 = 2d4 = E4

d = d1 + .. + d4 raises the degree, ∂ = δ1 + .. + δ4 lowers it, and
𝒟 = D1 + .. + D4 is the transport of S ⊕ T. Hence 2d + ∂ = 𝒟 + ℰ.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from sympy import Matrix, Rational, zeros

from dirac_pairings.errors import IdentityFailed, SemisimplicityFails
from dirac_pairings.fredholm.pairs import fredholm_index
from dirac_pairings.fredholm.perturbation import PerturbationReport, SuperOperator, perturbed_index
from dirac_pairings.lab.algebra import lab_algebra
from dirac_pairings.lab.clifford import SpinorMatrices, build_spinor_matrices, drop_position, wedge_in_front
from dirac_pairings.lab.dirac import dirac_cohomology
from dirac_pairings.lab.ext import Blocks, cochain_operator, ext_complex, ext_differential
from dirac_pairings.lab.homspaces import HomSpace, build_ST
from dirac_pairings.lab.modules import MatrixHCModule, modules_up_to
from dirac_pairings.spin import dirac_pairing, ep_pairing_finite_dim
from dirac_pairings.weights import Weight, build_root_datum

logger = logging.getLogger(__name__)

Operator = Callable[[Blocks], Blocks]


def _zero_like(phi: Blocks) -> Blocks:
    return {key: zeros(*m.shape) for key, m in phi.items()}


def eight_operators(space: HomSpace) -> dict[str, Operator]:
    """A1..A4 and B1..B4 as maps on cochain blocks."""
    a = space.spinors.algebra
    m = a.m
    p = a.p_basis
    on_x = [space.x.act(v) for v in p]
    on_y = [space.y.act(v) for v in p]

    def a1(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            for j, i in enumerate(i_set, start=1):
                out[(i_set, j_set)] += 2 * (-1) ** j * on_y[i] * phi[(drop_position(i_set, j - 1), j_set)]
        return out

    def a2(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            r = len(i_set)
            for i in range(m):
                sign, wider = wedge_in_front(i, j_set)
                if sign:
                    out[(i_set, j_set)] += (-1) ** r * sign * on_y[i] * phi[(i_set, wider)]
        return out

    def a3(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            for j, i in enumerate(i_set, start=1):
                out[(i_set, j_set)] += -2 * (-1) ** j * phi[(drop_position(i_set, j - 1), j_set)] * on_x[i]
        return out

    def a4(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            r = len(i_set)
            for i in range(m):
                sign, wider = wedge_in_front(i, j_set)
                if sign:
                    out[(i_set, j_set)] += -((-1) ** r) * sign * phi[(i_set, wider)] * on_x[i]
        return out

    def b1(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            for i in range(m):
                sign, wider = wedge_in_front(i, i_set)
                if sign:
                    out[(i_set, j_set)] += sign * on_y[m + i] * phi[(wider, j_set)]
        return out

    def b2(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            r = len(i_set)
            for j, i in enumerate(j_set, start=1):
                out[(i_set, j_set)] += (
                    2 * (-1) ** r * (-1) ** j * on_y[m + i] * phi[(i_set, drop_position(j_set, j - 1))]
                )
        return out

    def b3(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            for i in range(m):
                sign, wider = wedge_in_front(i, i_set)
                if sign:
                    out[(i_set, j_set)] += -sign * phi[(wider, j_set)] * on_x[m + i]
        return out

    def b4(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            r = len(i_set)
            for j, i in enumerate(j_set, start=1):
                out[(i_set, j_set)] += (
                    -2 * (-1) ** r * (-1) ** j * phi[(i_set, drop_position(j_set, j - 1))] * on_x[m + i]
                )
        return out

    return {"A1": a1, "A2": a2, "A3": a3, "A4": a4, "B1": b1, "B2": b2, "B3": b3, "B4": b4}


def clifford_action(space: HomSpace) -> Operator:
    """A + B before expansion, with gamma on ∧U and its transpose pattern on ∧U*.

    gamma(u*_i) contracts lambda, gamma*(u*_i) = u*_i ∧ acts on mu; for B the roles
    of u_i and u*_i swap.
    """
    s = space.spinors
    a = s.algebra
    m = a.m
    p = a.p_basis
    on_x = [space.x.act(v) for v in p]
    on_y = [space.y.act(v) for v in p]

    def expand(matrix: Matrix, subset) -> list[tuple[Rational, tuple[int, ...]]]:
        col = s.position(subset)
        return [(matrix[row, col], s.basis[row]) for row in range(s.dim) if matrix[row, col] != 0]

    def apply(phi: Blocks) -> Blocks:
        out = _zero_like(phi)
        for (i_set, j_set) in phi:
            r = len(i_set)
            total = out[(i_set, j_set)]
            for i in range(m):
                # A: u_i acts, u*_i enters the wedge
                for c, lam in expand(s.gamma_u_star[i], i_set):
                    total += c * (on_y[i] * phi[(lam, j_set)] - phi[(lam, j_set)] * on_x[i])
                for c, mu in expand(s.gamma_u[i], j_set):
                    total += (-1) ** r * c * (on_y[i] * phi[(i_set, mu)] - phi[(i_set, mu)] * on_x[i])
                # B: u*_i acts, u_i enters the wedge
                for c, lam in expand(s.gamma_u[i], i_set):
                    total += c * (on_y[m + i] * phi[(lam, j_set)] - phi[(lam, j_set)] * on_x[m + i])
                for c, mu in expand(s.gamma_u_star[i], j_set):
                    total += (-1) ** r * c * (
                        on_y[m + i] * phi[(i_set, mu)] - phi[(i_set, mu)] * on_x[m + i]
                    )
            out[(i_set, j_set)] = total
        return out

    return apply


@dataclass(frozen=True, eq=False)
class SplitOperators:
    """All operators of the splitting as matrices in the unit basis of the cochains."""

    space: HomSpace
    parts: dict[str, Matrix]
    ext: Matrix
    transported: Matrix
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def d(self) -> Matrix:
        """d1 + d2 + d3 + d4."""
        p = self.parts
        return (p["A1"] + p["A3"] + p["B2"] + p["B4"]) / 2

    @property
    def delta(self) -> Matrix:
        p = self.parts
        return p["A2"] + p["A4"] + p["B1"] + p["B3"]

    @property
    def script_d(self) -> Matrix:
        p = self.parts
        return p["A2"] + p["A3"] + p["B2"] + p["B3"]

    @property
    def script_e(self) -> Matrix:
        p = self.parts
        return p["A1"] + p["A4"] + p["B1"] + p["B4"]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "X": self.space.x.name,
            "Y": self.space.y.name,
            "dims": self.space.dims_by_degree(),
            "checks": self.checks,
            "holds": self.holds,
        }


def _require(checks: dict[str, bool], label: str, lhs: Matrix, rhs: Matrix) -> None:
    """Record ``label`` or raise with the first entry where the two sides differ."""
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                raise IdentityFailed(label, f"entry ({i}, {j}): {lhs[i, j]} vs {rhs[i, j]}")
    checks[label] = True


def split_operators(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> SplitOperators:
    """Build every operator and check each identity relating them.

    Raises IdentityFailed naming the identity and its first differing entry.
    """
    st = build_ST(x, y, spinors)
    space = st.space
    parts = {name: cochain_operator(space, op) for name, op in eight_operators(space).items()}
    ext = cochain_operator(space, ext_differential(space))
    theta = space.transport
    transported = theta * st.full * theta.inv() if space.dim else st.full
    split = SplitOperators(space, parts, ext, transported)

    d, zero = split.d, zeros(space.dim, space.dim)
    checks = split.checks
    try:
        _require(checks, "d1 + d2 + d3 + d4 = -(Ext differential)", d, -ext)
        _require(checks, "d² = 0", d * d, zero)
        _require(checks, "∂² = 0", split.delta * split.delta, zero)
        _require(checks, "S ⊕ T transports to 𝒟", transported, split.script_d)
        _require(checks, "2d + ∂ = 𝒟 + ℰ", 2 * d + split.delta, transported + split.script_e)
        clifford = cochain_operator(space, clifford_action(space))
        _require(checks, "A + B = sum of the eight operators", clifford, sum(parts.values(), zero))
    except IdentityFailed as e:
        logger.warning("Splitting identity failed for %s, %s: %s", x.name, y.name, e)
        raise
    return split


def _super(space: HomSpace, matrix: Matrix) -> SuperOperator:
    order = space.even + space.odd
    reordered = matrix.extract(order, order) if order else matrix
    return SuperOperator(len(space.even), len(space.odd), reordered)


def perturbation_instance(
    x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices
) -> tuple[SuperOperator, SuperOperator]:
    """(d, ∂ / 2) on the cochains, even degrees first; d + ∂/2 is half the Dirac action."""
    split = split_operators(x, y, spinors)
    return _super(split.space, split.d), _super(split.space, split.delta / 2)


def highest_weight(module: MatrixHCModule) -> Weight:
    """Infinitesimal character minus rho, in the coordinates of the lab's root datum."""
    rho = module.algebra.rho
    return Weight.of(*(int(c - r) for c, r in zip(module.infinitesimal_character, rho, strict=True)))


def perturbation_exports(n_max: int, group: str = "sl2R") -> list[tuple[str, SuperOperator, SuperOperator]]:
    """Labelled (d, ∂ / 2) for every pair F_n, F_m with n, m <= n_max."""
    algebra = lab_algebra(group)
    spinors = build_spinor_matrices(algebra)
    modules = modules_up_to(n_max, algebra)
    return [
        (f"{x.name}, {y.name}", *perturbation_instance(x, y, spinors))
        for x in modules
        for y in modules
    ]


@dataclass(frozen=True)
class ConjectureReport:
    x: str
    y: str
    index_d: int
    index_script_d: int
    euler_poincare: int
    euler_poincare_weights: int
    dirac: int
    perturbation: PerturbationReport | None
    note: str | None = None

    @property
    def holds(self) -> bool:
        values = {
            self.index_d,
            self.index_script_d,
            self.euler_poincare,
            self.euler_poincare_weights,
            self.dirac,
        }
        return len(values) == 1 and (self.perturbation is None or self.perturbation.holds)

    def to_json(self) -> dict[str, Any]:
        return {
            "X": self.x,
            "Y": self.y,
            "ind_d": self.index_d,
            "ind_script_D": self.index_script_d,
            "EP": self.euler_poincare,
            "EP_weights": self.euler_poincare_weights,
            "dirac": self.dirac,
            "perturbation": None if self.perturbation is None else self.perturbation.to_json(),
            "note": self.note,
            "holds": self.holds,
        }


def conjecture_check(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> ConjectureReport:
    """ind(d+, d-) and ind(𝒟+, 𝒟-) against EP(X, Y), from the Ext complex and from
    the highest weights, and <X, Y>_Dir."""
    split = split_operators(x, y, spinors)
    space = split.space
    index_d = fredholm_index(_super(space, split.d).as_pair()).index
    index_script_d = fredholm_index(_super(space, split.transported).as_pair()).index
    euler = ext_complex(x, y, spinors).euler
    datum = build_root_datum(x.algebra.datum_name)
    euler_weights = ep_pairing_finite_dim(datum, highest_weight(x), highest_weight(y))
    dirac = dirac_pairing(dirac_cohomology(x, spinors).index, dirac_cohomology(y, spinors).index)

    perturbation, note = None, None
    try:
        perturbation = perturbed_index(_super(space, split.d), _super(space, split.delta / 2))
    except SemisimplicityFails as e:
        note = str(e)
        logger.warning("Perturbation check skipped for %s, %s: %s", x.name, y.name, e)
    report = ConjectureReport(
        x.name, y.name, index_d, index_script_d, euler, euler_weights, dirac, perturbation, note
    )
    logger.debug("Index comparison %s", report.to_json())
    return report
