"""Characters of the spinor modules S+ and S- of the spin double cover of K."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from dirac_pairings.errors import IdentityFailed
from dirac_pairings.weights import (
    Cover,
    LaurentElement,
    RootDatum,
    VirtualCharacter,
    Weight,
    decompose,
    dual,
    rho_vectors,
    tensor,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpinorPair:
    """S+ (even exterior degree) and S- (odd) built on the noncompact part of a chamber."""

    s_plus: VirtualCharacter
    s_minus: VirtualCharacter
    reference_chamber: int = 0

    @property
    def difference(self) -> VirtualCharacter:
        return self.s_plus - self.s_minus


def spinor_weights(datum: RootDatum, chamber: int = 0) -> tuple[LaurentElement, LaurentElement]:
    """Weights -rho_n + (subset sums of positive noncompact roots), split by subset parity."""
    _, _, rho_n = rho_vectors(datum, chamber)
    positives = datum.positive_noncompact(chamber)
    even: list[tuple[Weight, int]] = []
    odd: list[tuple[Weight, int]] = []
    for size in range(len(positives) + 1):
        for subset in combinations(positives, size):
            weight = sum(subset, -rho_n)
            (odd if size % 2 else even).append((weight, 1))
    return LaurentElement(even), LaurentElement(odd)


def spinor_modules(datum: RootDatum, reference_chamber: int = 0) -> SpinorPair:
    even, odd = spinor_weights(datum, reference_chamber)
    pair = SpinorPair(
        s_plus=decompose(datum, even, Cover.SPIN),
        s_minus=decompose(datum, odd, Cover.SPIN),
        reference_chamber=reference_chamber,
    )
    logger.debug("Spinor modules of %s: S+ = %s, S- = %s", datum.name, pair.s_plus, pair.s_minus)
    return pair


def wedge_p_alternating(datum: RootDatum, spinors: SpinorPair | None = None) -> VirtualCharacter:
    """sum_i (-1)^i [wedge^i p], checked against (S+ - S-)^* (x) (S+ - S-)."""
    noncompact = datum.noncompact_roots
    zero = Weight.zero(datum.rank)
    terms = [
        (sum(subset, zero), (-1) ** size)
        for size in range(len(noncompact) + 1)
        for subset in combinations(noncompact, size)
    ]
    alternating = decompose(datum, LaurentElement(terms), Cover.K)

    spinors = spinors or spinor_modules(datum)
    difference = spinors.difference
    product = tensor(datum, dual(datum, difference), difference)
    if product != alternating:
        raise IdentityFailed(
            "Alternating exterior algebra of p differs from (S+ - S-)^* (x) (S+ - S-)",
            f"{alternating} vs {product}",
        )
    return alternating
