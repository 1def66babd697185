"""Harish-Chandra parameters of discrete series and their limits."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from dirac_pairings.errors import InvalidParameter, SingularOnCompactWall
from dirac_pairings.weights import (
    Cover,
    RootDatum,
    Weight,
    WeylKind,
    dominant_conjugate,
    stabilizer_order,
    weyl_group,
)

logger = logging.getLogger(__name__)


class ParameterKind(str, Enum):
    DISCRETE_SERIES = "ds"
    LIMIT = "limit"


@dataclass(frozen=True)
class HCParameter:
    """chi = lambda + rho(b) on the spin-cover lattice, with its chamber b."""

    chi: Weight
    chamber: int
    kind: ParameterKind = ParameterKind.DISCRETE_SERIES

    def __str__(self) -> str:
        return f"{self.kind.value}{self.chi}@b{self.chamber}"


def validate_parameter(datum: RootDatum, p: HCParameter) -> None:
    if not 0 <= p.chamber < datum.chamber_count:
        raise InvalidParameter(f"No chamber {p.chamber}")
    for root in datum.positive_roots(p.chamber):
        value = datum.inner(p.chi, root)
        if value < 0:
            raise InvalidParameter(f"<chi, {root}> < 0 for {p}")
        if value == 0:
            if datum.is_compact(root):
                raise SingularOnCompactWall(f"{p} is orthogonal to the compact root {root}")
            if p.kind is ParameterKind.DISCRETE_SERIES:
                raise InvalidParameter(f"{p} is singular; use a limit parameter")


def normalize_parameter(datum: RootDatum, p: HCParameter) -> HCParameter:
    """Conjugate (chi, b) by W_k so that b induces the reference compact positive system."""
    validate_parameter(datum, p)
    target = datum.compact_positive_system(0)
    compact = datum.compact_positive_system(p.chamber)
    for element in weyl_group(datum, WeylKind.COMPACT):
        if frozenset(element.apply(r) for r in compact) == target:
            chamber = datum.chamber_index(
                frozenset(element.apply(r) for r in datum.chamber_catalog[p.chamber])
            )
            return HCParameter(element.apply(p.chi).on(Cover.SPIN), chamber, p.kind)
    raise InvalidParameter(f"No compact Weyl element normalises {p}")  # pragma: no cover


def parameters_for(datum: RootDatum, infinitesimal: Weight) -> list[HCParameter]:
    """One parameter per chamber inducing the reference compact system, for a W-orbit."""
    target = datum.compact_positive_system(0)
    found = []
    for chamber in range(datum.chamber_count):
        if datum.compact_positive_system(chamber) != target:
            continue
        chi, _, singular = dominant_conjugate(datum, infinitesimal, WeylKind.FULL, chamber)
        kind = ParameterKind.LIMIT if singular else ParameterKind.DISCRETE_SERIES
        p = HCParameter(chi.on(Cover.SPIN), chamber, kind)
        try:
            validate_parameter(datum, p)
        except SingularOnCompactWall:
            logger.debug("Skipping %s: on a compact wall", p)
            continue
        found.append(p)
    return found


def ds_family(datum: RootDatum, n: int) -> list[HCParameter]:
    """Discrete series (or limits, for n = 0) with infinitesimal character n * rho."""
    return parameters_for(datum, datum.rho.scaled(n))


@dataclass(frozen=True)
class LimitCombination:
    """X_{chi,b2} = (1/|W_chi|) sum over chambers b whose closure contains chi of eps(b) A_b."""

    chi: Weight
    base_chamber: int
    members: tuple[tuple[HCParameter, int], ...]
    weight: Fraction


def limit_combination(datum: RootDatum, chi: Weight, base_chamber: int) -> LimitCombination:
    base = HCParameter(chi.on(Cover.SPIN), base_chamber, ParameterKind.LIMIT)
    validate_parameter(datum, base)
    base_sign = datum.chamber_elements[base_chamber].sign
    members = []
    for chamber in range(datum.chamber_count):
        member = HCParameter(base.chi, chamber, ParameterKind.LIMIT)
        try:
            validate_parameter(datum, member)
        except InvalidParameter:
            continue
        members.append((member, datum.chamber_elements[chamber].sign * base_sign))
    order = stabilizer_order(datum, chi, WeylKind.FULL)
    if len(members) != order:
        raise InvalidParameter(
            f"{len(members)} chambers contain {chi} in their closure, expected |W_chi| = {order}"
        )
    return LimitCombination(base.chi, base_chamber, tuple(members), Fraction(1, order))
