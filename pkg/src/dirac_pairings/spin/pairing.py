"""Dirac pairing of indices and the Euler-Poincare pairing of finite-dimensional modules."""

from __future__ import annotations

import logging
from itertools import combinations

from dirac_pairings.spin.index import DiracIndex
from dirac_pairings.weights import (
    Cover,
    LaurentElement,
    RootDatum,
    Weight,
    decompose,
    g_character,
    pair,
    restrict_to_k,
)

logger = logging.getLogger(__name__)


def dirac_pairing(a: DiracIndex, b: DiracIndex) -> int:
    """<X, Y>_Dir = [I_Dir(X), I_Dir(Y)]."""
    return pair(a.index, b.index)


def index_coefficients(index: DiracIndex) -> list[tuple[Weight, int]]:
    """I(X, gamma) = [gamma, I_Dir(X)] for every K-type gamma where it is nonzero."""
    return list(index.index)


def dirac_pairing_summands(a: DiracIndex, b: DiracIndex) -> list[tuple[Weight, int, int]]:
    """(gamma, I(X, gamma), I(Y, gamma)) over the union of both supports."""
    left, right = a.index.as_dict(), b.index.as_dict()
    return [(g, left.get(g, 0), right.get(g, 0)) for g in sorted(set(left) | set(right))]


def wedge_p_degree(datum: RootDatum, degree: int) -> LaurentElement:
    """Torus character of wedge^degree p."""
    zero = Weight.zero(datum.rank)
    return LaurentElement(
        [(sum(subset, zero), 1) for subset in combinations(datum.noncompact_roots, degree)]
    )


def ep_pairing_degrees(
    datum: RootDatum, hw_x: Weight, hw_y: Weight, chamber: int = 0
) -> list[int]:
    """dim Hom_K(wedge^i p (x) X, Y) for i = 0..dim p."""
    char_x = g_character(datum, hw_x.on(Cover.K), chamber)
    restricted_y = restrict_to_k(datum, hw_y.on(Cover.K), chamber)
    dims = []
    for degree in range(datum.dim_p + 1):
        chain = decompose(datum, wedge_p_degree(datum, degree) * char_x, Cover.K)
        dims.append(pair(chain, restricted_y))
    return dims


def ep_pairing_finite_dim(datum: RootDatum, hw_x: Weight, hw_y: Weight, chamber: int = 0) -> int:
    """sum_i (-1)^i dim Hom_K(wedge^i p (x) X, Y)."""
    dims = ep_pairing_degrees(datum, hw_x, hw_y, chamber)
    value = sum((-1) ** i * d for i, d in enumerate(dims))
    logger.debug("EP(%s, %s) on %s: degrees %s -> %d", hw_x, hw_y, datum.name, dims, value)
    return value
