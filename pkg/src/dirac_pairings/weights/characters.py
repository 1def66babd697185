"""Virtual characters of K and its spin double cover.

Irreducible characters are expanded by Freudenthal's multiplicity formula; Laurent
elements go back to the irreducible basis by the Racah-Speiser (Brauer-Klimyk)
rule: shift by rho_c, move to the dominant chamber with sign, drop wall hits.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from dirac_pairings.errors import CoverMismatch, IdentityFailed, NonDominantWeight, NotInvariant
from dirac_pairings.weights.lattice import Cover, LaurentElement, Weight
from dirac_pairings.weights.roots import RootDatum
from dirac_pairings.weights.weyl import (
    WeylKind,
    coroot_pairing,
    dominant_conjugate,
    reflect,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer combination of irreducible characters, keyed by dominant highest weight."""

    terms: tuple[tuple[Weight, int], ...]
    cover: Cover = Cover.K

    @classmethod
    def from_terms(
        cls, terms: Mapping[Weight, int], cover: Cover | None = None
    ) -> VirtualCharacter:
        clean = {w: int(c) for w, c in terms.items() if c}
        covers = {w.cover for w in clean}
        if len(covers) > 1:
            raise CoverMismatch("Terms on both K and its spin cover")
        if covers:
            found = covers.pop()
            if cover is not None and cover is not found:
                raise CoverMismatch(f"Terms live on {found.value}, expected {cover.value}")
            cover = found
        return cls(tuple(sorted(clean.items())), cover or Cover.K)

    @classmethod
    def zero(cls, cover: Cover = Cover.K) -> VirtualCharacter:
        return cls((), cover)

    @classmethod
    def irreducible(cls, hw: Weight, coeff: int = 1) -> VirtualCharacter:
        return cls.from_terms({hw: coeff})

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def coefficient(self, hw: Weight) -> int:
        return self.as_dict().get(hw, 0)

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_cover(self, other: VirtualCharacter) -> None:
        if self.cover is not other.cover:
            raise CoverMismatch(
                f"Cannot combine characters on {self.cover.value} and {other.cover.value}"
            )

    def __add__(self, other: VirtualCharacter) -> VirtualCharacter:
        self._check_cover(other)
        merged: dict[Weight, int] = defaultdict(int)
        for w, c in (*self.terms, *other.terms):
            merged[w] += c
        return VirtualCharacter.from_terms(merged, self.cover)

    def __neg__(self) -> VirtualCharacter:
        return VirtualCharacter(tuple((w, -c) for w, c in self.terms), self.cover)

    def __sub__(self, other: VirtualCharacter) -> VirtualCharacter:
        return self + (-other)

    def scaled(self, factor: int) -> VirtualCharacter:
        return VirtualCharacter.from_terms({w: factor * c for w, c in self.terms}, self.cover)

    def to_json(self) -> list[dict[str, Any]]:
        return [{"weight": w.to_json(), "coeff": c} for w, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*F{w}" for w, c in self.terms).replace("+ -", "- ")


def _check_dominant(datum: RootDatum, hw: Weight, simple: Sequence[Weight]) -> None:
    for root in simple:
        n = coroot_pairing(datum.gram, hw, root)
        if n.denominator != 1 or n < 0:
            raise NonDominantWeight(f"{hw} is not dominant integral for simple root {root}")


def is_k_dominant(datum: RootDatum, hw: Weight) -> bool:
    """Dominant integral for the compact roots positive in the reference chamber."""
    try:
        _check_dominant(datum, hw, datum.compact_simple_roots)
    except NonDominantWeight:
        return False
    return True


def _freudenthal(
    datum: RootDatum, hw: Weight, positive: Sequence[Weight], simple: Sequence[Weight]
) -> LaurentElement:
    """Weight multiplicities of the irreducible module of highest weight ``hw``."""
    if not positive:
        return LaurentElement.monomial(hw)
    rho = Weight(tuple(sum(r.coords[i] for r in positive) // 2 for i in range(datum.rank)))
    top = datum.norm2(hw + rho)
    multiplicities: dict[Weight, int] = {hw: 1}
    level = [hw]
    depth = 0
    while level:
        depth += 1
        candidates = sorted({w - s for w in level for s in simple})
        level = []
        for mu in candidates:
            denominator = top - datum.norm2(mu + rho)
            if denominator <= 0:
                continue
            numerator = Fraction(0)
            for root in positive:
                # mu + j*root sits at least j levels higher, so depth bounds the string
                for j in range(1, depth + 1):
                    shifted = mu + root.scaled(j)
                    if shifted in multiplicities:
                        numerator += multiplicities[shifted] * datum.inner(shifted, root)
            value = 2 * numerator / denominator
            if value.denominator != 1:
                raise ArithmeticError(f"Non-integral multiplicity {value} at {mu}")
            if value:
                multiplicities[mu] = int(value)
                level.append(mu)
    return LaurentElement(multiplicities)


@lru_cache(maxsize=4096)
def irr_character(datum: RootDatum, hw: Weight) -> LaurentElement:
    """Full weight expansion of the irreducible K (or spin-cover) character of highest weight hw."""
    _check_dominant(datum, hw, datum.compact_simple_roots)
    return _freudenthal(datum, hw, datum.positive_compact_roots, datum.compact_simple_roots)


@lru_cache(maxsize=1024)
def g_character(datum: RootDatum, hw: Weight, chamber: int = 0) -> LaurentElement:
    """Torus character of the finite-dimensional g-module of highest weight hw for a chamber."""
    simple = datum.simple_roots_of(chamber)
    _check_dominant(datum, hw, simple)
    return _freudenthal(datum, hw, datum.positive_roots(chamber), simple)


def is_compact_invariant(datum: RootDatum, f: LaurentElement) -> bool:
    for root in datum.compact_simple_roots:
        if f.map_weights(lambda w, r=root: reflect(datum.gram, r, w)) != f:
            return False
    return True


def decompose(
    datum: RootDatum, f: LaurentElement, cover: Cover | None = None
) -> VirtualCharacter:
    """Rewrite a W_k-invariant Laurent element on the irreducible basis."""
    if not is_compact_invariant(datum, f):
        raise NotInvariant("Laurent element is not invariant under the compact Weyl group")
    rho_c = datum.rho_c
    result: dict[Weight, int] = defaultdict(int)
    for mu, coeff in f.items():
        dominant, sign, singular = dominant_conjugate(datum, mu + rho_c, WeylKind.COMPACT)
        if singular:
            continue
        result[dominant - rho_c] += sign * coeff
    return VirtualCharacter.from_terms(result, cover)


def expand(datum: RootDatum, a: VirtualCharacter) -> LaurentElement:
    total = LaurentElement()
    for hw, coeff in a:
        total = total + irr_character(datum, hw) * coeff
    return total


def pair(a: VirtualCharacter, b: VirtualCharacter) -> int:
    """[a, b]: the multiplicity pairing on the irreducible basis."""
    if a.cover is not b.cover:
        raise CoverMismatch(f"Cannot pair characters on {a.cover.value} and {b.cover.value}")
    right = b.as_dict()
    return sum(c * right.get(w, 0) for w, c in a)


def tensor(datum: RootDatum, a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    cover = a.cover.combine(b.cover)
    if a.is_zero() or b.is_zero():
        return VirtualCharacter.zero(cover)
    return decompose(datum, expand(datum, a) * expand(datum, b), cover)


def dual(datum: RootDatum, a: VirtualCharacter) -> VirtualCharacter:
    return decompose(datum, expand(datum, a).map_weights(lambda w: -w), a.cover)


def restrict_to_k(datum: RootDatum, hw: Weight, chamber: int = 0) -> VirtualCharacter:
    """Restriction to K of the finite-dimensional g-module of highest weight hw."""
    return decompose(datum, g_character(datum, hw, chamber), hw.cover)


def dimension(datum: RootDatum, a: VirtualCharacter) -> int:
    """Weyl dimension formula, summed over the terms."""
    rho_c = datum.rho_c
    total = Fraction(0)
    for hw, coeff in a:
        dim = Fraction(1)
        for root in datum.positive_compact_roots:
            dim *= datum.inner(hw + rho_c, root) / datum.inner(rho_c, root)
        total += coeff * dim
    if total.denominator != 1:
        raise IdentityFailed("Weyl dimension formula gave a non-integer", f"{total} for {a}")
    return int(total)
