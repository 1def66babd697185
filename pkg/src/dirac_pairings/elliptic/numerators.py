"""Character numerators of (limits of) discrete series on the compact Cartan.

On the compact torus the character of a discrete series, or of a limit, is the
W_k-alternating sum of exponentials of its parameter divided by the Weyl
denominator. The elliptic pairing integrates one character against the conjugate
of another over the elliptic set; after the Weyl integration formula the
denominators cancel against |D_G| and torus exponentials are orthonormal, so only
the numerators and a coefficient dot product are left.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from dirac_pairings.errors import IdentityFailed, LatticeMismatch
from dirac_pairings.spin import (
    HCParameter,
    dirac_index_limits,
    dirac_pairing,
    normalize_parameter,
)
from dirac_pairings.tables import gram_table
from dirac_pairings.weights import (
    Cover,
    LaurentElement,
    RootDatum,
    WeylKind,
    stabilizer_order,
    weyl_group,
)
from dirac_pairings.weights.weyl import reflect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterNumerator:
    num: LaurentElement
    global_sign: int
    parameter: HCParameter
    datum: RootDatum = field(repr=False, compare=False)

    @property
    def cover(self) -> Cover:
        return self.parameter.chi.cover


@dataclass(frozen=True)
class EllipticPairingValue:
    value: Fraction

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1

    def __int__(self) -> int:
        if not self.is_integral:
            raise IdentityFailed("Elliptic pairing is not an integer", str(self.value))
        return int(self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EllipticPairingValue):
            return self.value == other.value
        if isinstance(other, int | Fraction):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _check_alternating(datum: RootDatum, num: LaurentElement) -> None:
    for root in datum.compact_simple_roots:
        image = num.map_weights(lambda w, r=root: reflect(datum.gram, r, w), sign=-1)
        if image != num:
            raise IdentityFailed("Numerator is not W_k-alternating", f"reflection in {root}")


def ds_numerator(datum: RootDatum, p: HCParameter) -> CharacterNumerator:
    """sum over W_k of sgn(w) e^{w chi}, for the W_k-normalised parameter."""
    p = normalize_parameter(datum, p)
    num = LaurentElement(
        [(element.apply(p.chi), element.sign) for element in weyl_group(datum, WeylKind.COMPACT)]
    )
    _check_alternating(datum, num)
    sign = datum.chamber_elements[p.chamber].sign
    logger.debug("Numerator of %s: %r, sign %+d", p, num, sign)
    return CharacterNumerator(num, sign, p, datum)


def elliptic_pairing(a: CharacterNumerator, b: CharacterNumerator) -> EllipticPairingValue:
    """(eps_a eps_b / |W_k|) times the coefficient dot product of the numerators."""
    if a.datum != b.datum:
        raise LatticeMismatch(f"Numerators on {a.datum.name} and {b.datum.name}")
    if a.cover is not b.cover:
        raise LatticeMismatch(f"Numerators on {a.cover.value} and {b.cover.value}")
    order = len(a.datum.compact_weyl_group)
    return EllipticPairingValue(Fraction(a.global_sign * b.global_sign * a.num.dot(b.num), order))


@dataclass
class EllipticReport:
    """Dirac and elliptic Gram matrices of a parameter list, side by side."""

    params: list[HCParameter]
    gram_dirac: list[list[int]]
    gram_elliptic: list[list[Fraction]]
    mismatches: list[tuple[int, int]] = field(default_factory=list)
    singular: list[tuple[int, int]] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict[str, Any]:
        def number(x: Fraction) -> int | str:
            return int(x) if x.denominator == 1 else str(x)

        return {
            "params": [
                {"chi": p.chi.to_json(), "chamber": p.chamber, "kind": p.kind.value}
                for p in self.params
            ],
            "gram_dirac": self.gram_dirac,
            "gram_elliptic": [[number(x) for x in row] for row in self.gram_elliptic],
            "equal": self.equal,
            "mismatches": [list(ij) for ij in self.mismatches],
            "singular": [{"param": i, "stabilizer_order": n} for i, n in self.singular],
        }


def verify_dirac_equals_elliptic(
    datum: RootDatum, params: list[HCParameter], threads: int | None = None
) -> EllipticReport:
    """Both Gram matrices for ``params``; disagreements are listed, never raised."""
    indices = [dirac_index_limits(datum, p) for p in params]
    numerators = [ds_numerator(datum, p) for p in params]
    gram_dirac = gram_table(indices, dirac_pairing, threads)
    gram_elliptic = gram_table(numerators, lambda a, b: elliptic_pairing(a, b).value, threads)

    report = EllipticReport(list(params), gram_dirac, gram_elliptic)
    for i, row in enumerate(gram_dirac):
        for j, value in enumerate(row):
            if gram_elliptic[i][j] != value:
                report.mismatches.append((i, j))
    for i, p in enumerate(params):
        order = stabilizer_order(datum, p.chi, WeylKind.FULL)
        if order > 1:
            report.singular.append((i, order))
    if report.mismatches:
        i, j = report.mismatches[0]
        logger.warning(
            "Dirac and elliptic pairings differ at (%d, %d): %s vs %s",
            i, j, gram_dirac[i][j], gram_elliptic[i][j],
        )
    logger.info(
        "Compared %d x %d Gram matrices on %s: %s",
        len(params), len(params), datum.name, "equal" if report.equal else "MISMATCH",
    )
    return report
