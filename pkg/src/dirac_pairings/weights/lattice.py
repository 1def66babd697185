"""Weights in doubled coordinates and the group ring of the torus.

A weight stores twice its actual coordinates, so that half-sums of roots and
spinor weights are integer vectors. Every weight also carries the cover it lives
on: the weight lattice of K, or the one of its spin double cover.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Cover(str, Enum):
    """Which group a weight or character lives on."""

    K = "K"
    SPIN = "K~"

    def combine(self, other: Cover) -> Cover:
        """Cover of a tensor product: two genuine spin characters land back on K."""
        return Cover.SPIN if (self is Cover.SPIN) != (other is Cover.SPIN) else Cover.K


@dataclass(frozen=True, order=True)
class Weight:
    """A point of the weight lattice, in doubled coordinates."""

    coords: tuple[int, ...]
    cover: Cover = Cover.K

    @classmethod
    def of(cls, *coords: int, cover: Cover = Cover.K) -> Weight:
        return cls(tuple(int(c) for c in coords), cover)

    @classmethod
    def zero(cls, rank: int, cover: Cover = Cover.K) -> Weight:
        return cls((0,) * rank, cover)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def on(self, cover: Cover) -> Weight:
        """The same coordinates retagged on another cover."""
        return Weight(self.coords, cover)

    def __add__(self, other: Weight) -> Weight:
        if self.rank != other.rank:
            raise ValueError(f"Rank mismatch: {self.rank} vs {other.rank}")
        return Weight(
            tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)),
            self.cover.combine(other.cover),
        )

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.cover)

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def scaled(self, factor: int) -> Weight:
        return Weight(tuple(factor * a for a in self.coords), self.cover)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[int]:
        return list(self.coords)


def bilinear(gram: tuple[tuple[int, ...], ...], a: Weight, b: Weight) -> Fraction:
    """<a, b> for weights in doubled coordinates (hence the factor 1/4)."""
    total = 0
    for i, ai in enumerate(a.coords):
        if ai:
            row = gram[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b.coords))
    return Fraction(total, 4)


class LaurentElement:
    """Finite integer combination of torus characters e^w, zero terms dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Weight, int] = defaultdict(int)
        for weight, coeff in items:
            collected[weight] += int(coeff)
        self._terms = {w: c for w, c in collected.items() if c}

    @classmethod
    def monomial(cls, weight: Weight, coeff: int = 1) -> LaurentElement:
        return cls({weight: coeff})

    @property
    def terms(self) -> Mapping[Weight, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Weight, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, weight: Weight) -> int:
        return self._terms.get(weight, 0)

    def support(self) -> list[Weight]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LaurentElement) -> LaurentElement:
        return LaurentElement([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> LaurentElement:
        return LaurentElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: LaurentElement) -> LaurentElement:
        return self + (-other)

    def __mul__(self, other: LaurentElement | int) -> LaurentElement:
        if isinstance(other, int):
            return LaurentElement({w: other * c for w, c in self._terms.items()})
        product: dict[Weight, int] = defaultdict(int)
        for wa, ca in self._terms.items():
            for wb, cb in other._terms.items():
                product[wa + wb] += ca * cb
        return LaurentElement(product)

    __rmul__ = __mul__

    def map_weights(self, fn: Callable[[Weight], Weight], sign: int = 1) -> LaurentElement:
        """Push every exponent through ``fn`` and multiply by ``sign``."""
        return LaurentElement([(fn(w), sign * c) for w, c in self._terms.items()])

    def dot(self, other: LaurentElement) -> int:
        """Coefficient dot product, i.e. the torus integral of self times conj(other)."""
        return sum(c * other._terms.get(w, 0) for w, c in self._terms.items())

    def total(self) -> int:
        """Sum of coefficients (the value at the identity of the torus)."""
        return sum(self._terms.values())

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {c}" for w, c in self.items())
        return f"LaurentElement({{{body}}})"
