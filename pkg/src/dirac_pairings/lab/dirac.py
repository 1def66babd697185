"""The Dirac operator on X ⊗ S, Parthasarathy's formula and Dirac cohomology."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from sympy import Matrix, Rational, eye, zeros

from dirac_pairings.errors import IdentityFailed
from dirac_pairings.fredholm.linalg import is_zero
from dirac_pairings.fredholm.pairs import FredholmPairData, fredholm_index
from dirac_pairings.lab.algebra import kron
from dirac_pairings.lab.clifford import SpinorMatrices
from dirac_pairings.lab.modules import MatrixHCModule
from dirac_pairings.spin import DiracIndex
from dirac_pairings.weights import Cover, VirtualCharacter, Weight

logger = logging.getLogger(__name__)

LabWeight = tuple[int, ...]


def tensor_weights(module: MatrixHCModule, spinors: SpinorMatrices) -> list[LabWeight]:
    """Weights of X ⊗ S in the basis x ⊗ s, index x * dim S + s."""
    return [
        tuple(a + b for a, b in zip(wx, ws, strict=True))
        for wx in module.weights
        for ws in spinors.weights
    ]


def dirac_matrix(
    module: MatrixHCModule, spinors: SpinorMatrices, basis: Sequence[Matrix] | None = None
) -> Matrix:
    """D = sum_i pi(Y_i) ⊗ gamma(Z_i) for a basis Y_i of p and its B-dual Z_i."""
    a = module.algebra
    basis = list(basis) if basis is not None else a.p_basis
    gram = Matrix(len(basis), len(basis), lambda i, j: a.b(basis[i], basis[j]))
    inverse = gram.inv()
    out = zeros(module.dim * spinors.dim, module.dim * spinors.dim)
    for i, y in enumerate(basis):
        z = zeros(a.dim, 1)
        for j, w in enumerate(basis):
            z += inverse[j, i] * w
        out += kron(module.act(y), spinors.gamma(z))
    return out


def _diagonal_action(module: MatrixHCModule, spinors: SpinorMatrices, h: Matrix) -> Matrix:
    """Delta(H) = pi(H) ⊗ 1 + 1 ⊗ alpha(H)."""
    return kron(module.act(h), eye(spinors.dim)) + kron(eye(module.dim), spinors.spin_map(h))


def verify_parthasarathy(module: MatrixHCModule, spinors: SpinorMatrices) -> Matrix:
    """D² = -Cas_g ⊗ 1 + Delta(Cas_k) + (|rho_k|² - |rho|²); returns D²."""
    a = module.algebra
    d = dirac_matrix(module, spinors)
    square = d * d
    n = module.dim * spinors.dim
    cas_k = zeros(n, n)
    inverse = a.cartan_form.inv()
    for i, c in enumerate(a.cartan):
        dual = zeros(a.dim, 1)
        for j, c2 in enumerate(a.cartan):
            dual[c2] = inverse[j, i]
        cas_k += _diagonal_action(module, spinors, a.unit(c)) * _diagonal_action(module, spinors, dual)
    constant = a.norm2(a.rho_k) - a.norm2(a.rho)
    rhs = -kron(module.casimir, eye(spinors.dim)) + cas_k + constant * eye(n)
    if not is_zero(square - rhs):
        raise IdentityFailed(f"Parthasarathy's formula fails on {module.name} ⊗ S")
    return square


def verify_scalar_action(module: MatrixHCModule, spinors: SpinorMatrices) -> dict[LabWeight, Rational]:
    """On the tau-isotypic part of X ⊗ S, D² = -|Lambda|² + |tau + rho_k|²."""
    a = module.algebra
    square = dirac_matrix(module, spinors) ** 2
    weights = tensor_weights(module, spinors)
    lam = a.norm2(module.infinitesimal_character)
    scalars: dict[LabWeight, Rational] = {}
    for i, tau in enumerate(weights):
        shifted = [t + r for t, r in zip(tau, a.rho_k, strict=True)]
        scalars[tau] = -lam + a.norm2(shifted)
        for j, other in enumerate(weights):
            expected = scalars[tau] if i == j else 0
            if other != tau and square[j, i] != 0:
                raise IdentityFailed(f"D² mixes the weights {tau} and {other} on {module.name}")
            if other == tau and square[j, i] != expected:
                raise IdentityFailed(
                    f"D² is not {scalars[tau]} on the {tau} component of {module.name} ⊗ S"
                )
    return scalars


@dataclass(frozen=True)
class DiracCohomology:
    """dim H^±_D(X) per K~-weight."""

    module: str
    plus: dict[LabWeight, int]
    minus: dict[LabWeight, int]

    @property
    def index(self) -> DiracIndex:
        terms: dict[Weight, int] = defaultdict(int)
        for w, n in self.plus.items():
            terms[Weight.of(*w, cover=Cover.SPIN)] += n
        for w, n in self.minus.items():
            terms[Weight.of(*w, cover=Cover.SPIN)] -= n
        return DiracIndex(VirtualCharacter.from_terms(dict(terms), Cover.SPIN))

    def to_json(self) -> dict[str, Any]:
        return {
            "module": self.module,
            "H+": [{"weight": list(w), "dim": n} for w, n in sorted(self.plus.items())],
            "H-": [{"weight": list(w), "dim": n} for w, n in sorted(self.minus.items())],
        }


def dirac_cohomology(module: MatrixHCModule, spinors: SpinorMatrices) -> DiracCohomology:
    """H^± = ker D^± / (ker D^± ∩ Im D^∓), weight by weight."""
    d = dirac_matrix(module, spinors)
    weights = tensor_weights(module, spinors)
    parity = [spinors.parity(s) for _ in module.weights for s in spinors.basis]
    plus: dict[LabWeight, int] = {}
    minus: dict[LabWeight, int] = {}
    for tau in sorted(set(weights)):
        even = [i for i, w in enumerate(weights) if w == tau and parity[i] == 0]
        odd = [i for i, w in enumerate(weights) if w == tau and parity[i] == 1]
        pair = FredholmPairData(
            d.extract(odd, even) if odd and even else zeros(len(odd), len(even)),
            d.extract(even, odd) if odd and even else zeros(len(even), len(odd)),
        )
        index = fredholm_index(pair)
        if index.a:
            plus[tau] = index.a
        if index.b:
            minus[tau] = index.b
    logger.debug("Dirac cohomology of %s: H+ %s, H- %s", module.name, plus, minus)
    return DiracCohomology(module.name, plus, minus)
