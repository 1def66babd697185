"""Weyl groups of a root datum and the usual chamber bookkeeping."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING

from sympy import ImmutableMatrix, Matrix, Rational, eye

from dirac_pairings.errors import InvalidRootSystem
from dirac_pairings.weights.lattice import Cover, Weight, bilinear

if TYPE_CHECKING:
    from dirac_pairings.weights.roots import RootDatum

logger = logging.getLogger(__name__)

Gram = tuple[tuple[int, ...], ...]


class WeylKind(str, Enum):
    FULL = "full"
    COMPACT = "compact"


@dataclass(frozen=True)
class WeylGroupElement:
    """Integer matrix acting on doubled coordinates, with its sign."""

    matrix: ImmutableMatrix
    sign: int
    word: tuple[int, ...] = field(default=(), compare=False)

    def apply(self, weight: Weight) -> Weight:
        image = self.matrix * Matrix(weight.coords)
        return Weight(tuple(int(c) for c in image), weight.cover)

    def compose(self, other: WeylGroupElement) -> WeylGroupElement:
        """``self`` after ``other``."""
        return WeylGroupElement(
            ImmutableMatrix(self.matrix * other.matrix),
            self.sign * other.sign,
            self.word + other.word,
        )

    def inverse(self) -> WeylGroupElement:
        return WeylGroupElement(
            ImmutableMatrix(self.matrix.inv()), self.sign, tuple(reversed(self.word))
        )

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self.matrix == eye(self.matrix.rows)


def coroot_pairing(gram: Gram, weight: Weight, root: Weight) -> Fraction:
    """2<weight, root>/<root, root>."""
    return 2 * bilinear(gram, weight, root) / bilinear(gram, root, root)


def reflect(gram: Gram, root: Weight, weight: Weight) -> Weight:
    """s_root(weight), staying in doubled coordinates."""
    n = coroot_pairing(gram, weight, root)
    if n.denominator != 1:
        raise InvalidRootSystem(f"Reflection in {root} does not preserve the lattice at {weight}")
    return weight - root.scaled(int(n)).on(Cover.K)


def reflection_matrix(gram: Gram, root: Weight) -> ImmutableMatrix:
    """Matrix of s_root on doubled coordinates: I - a (2 G a)^T / (a^T G a)."""
    g = Matrix(gram)
    a = Matrix(root.coords)
    m = eye(len(root.coords)) - a * (2 * g * a).T / (a.T * g * a)[0, 0]
    if any(not entry.is_integer for entry in m):
        raise InvalidRootSystem(f"Reflection in {root} is not integral in these coordinates")
    return ImmutableMatrix(m)


def generate_group(generators: Sequence[ImmutableMatrix], rank: int) -> list[WeylGroupElement]:
    """Breadth-first closure of simple reflections; identity first, then by length."""
    identity = WeylGroupElement(ImmutableMatrix(eye(rank)), 1)
    elements = [identity]
    seen = {identity.matrix}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for index, generator in enumerate(generators):
            candidate = WeylGroupElement(
                ImmutableMatrix(generator * current.matrix), -current.sign, (index, *current.word)
            )
            if candidate.matrix in seen:
                continue
            seen.add(candidate.matrix)
            elements.append(candidate)
            queue.append(candidate)
    for element in elements:
        if element.matrix.det() != element.sign:
            raise InvalidRootSystem("Weyl group element sign disagrees with its determinant")
    return elements


def weyl_group(datum: RootDatum, which: WeylKind | str = WeylKind.FULL) -> list[WeylGroupElement]:
    """All elements of W (or W_k), identity first."""
    if WeylKind(which) is WeylKind.COMPACT:
        return list(datum.compact_weyl_group)
    return list(datum.chamber_elements)


def dominant_conjugate(
    datum: RootDatum,
    weight: Weight,
    which: WeylKind | str = WeylKind.COMPACT,
    chamber: int = 0,
) -> tuple[Weight, int, bool]:
    """Move ``weight`` into the closed dominant chamber.

    Returns the dominant conjugate, the sign of the element used, and whether the
    result lies on a wall. ``chamber`` selects the positive system for the full group;
    the compact group always uses the compact roots positive in the reference chamber.
    """
    if WeylKind(which) is WeylKind.COMPACT:
        simple = datum.compact_simple_roots
    else:
        simple = datum.simple_roots_of(chamber)
    current, sign = weight, 1
    moved = True
    while moved:
        moved = False
        for root in simple:
            if bilinear(datum.gram, current, root) < 0:
                current = reflect(datum.gram, root, current)
                sign = -sign
                moved = True
    singular = any(bilinear(datum.gram, current, root) == 0 for root in simple)
    return current, sign, singular


def stabilizer_order(
    datum: RootDatum, weight: Weight, which: WeylKind | str = WeylKind.FULL
) -> int:
    return sum(1 for w in weyl_group(datum, which) if w.apply(weight) == weight)


def rho_vectors(datum: RootDatum, chamber: int = 0) -> tuple[Weight, Weight, Weight]:
    """(rho, rho_c, rho_n) of a chamber; rho_c lives on K, the others on the spin cover."""
    positives = datum.positive_roots(chamber)
    zero = Weight.zero(datum.rank)
    compact = sum((r for r in positives if datum.is_compact(r)), zero)
    noncompact = sum((r for r in positives if not datum.is_compact(r)), zero)

    def half(w: Weight, cover: Cover) -> Weight:
        return Weight(tuple(c // 2 for c in w.coords), cover)

    rho_c = half(compact, Cover.K)
    rho_n = half(noncompact, Cover.SPIN)
    return rho_c + rho_n, rho_c, rho_n


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def fundamental_weights(datum: RootDatum) -> list[Weight]:
    """omega_i with 2<omega_i, alpha_j>/<alpha_j, alpha_j> = delta_ij, in the span of the roots."""
    simple = datum.simple_roots
    cartan = Matrix(
        len(simple), len(simple), lambda k, j: _rational(coroot_pairing(datum.gram, simple[k], simple[j]))
    )
    coefficients = cartan.inv()
    weights = []
    for i in range(len(simple)):
        coords = [
            sum(coefficients[i, k] * simple[k].coords[c] for k in range(len(simple)))
            for c in range(datum.rank)
        ]
        if any(not x.is_integer for x in coords):
            raise InvalidRootSystem("Fundamental weights are not representable in these coordinates")
        weights.append(Weight(tuple(int(x) for x in coords)))
    return weights
