"""Fredholm pairs (S: X -> Y, T: Y -> X) and their index."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from sympy import Matrix

from dirac_pairings.errors import IdentityFailed, ShapeMismatch
from dirac_pairings.fredholm.linalg import (
    image,
    intersection_dim,
    kernel,
    matrix_to_json,
    nullity,
    quotient_map,
    rank,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FredholmPairData:
    s: Matrix
    t: Matrix

    def __post_init__(self):
        if self.s.rows != self.t.cols or self.s.cols != self.t.rows:
            raise ShapeMismatch(
                f"S is {self.s.rows}x{self.s.cols} but T is {self.t.rows}x{self.t.cols}"
            )

    @property
    def dim_x(self) -> int:
        return self.s.cols

    @property
    def dim_y(self) -> int:
        return self.s.rows

    def to_json(self) -> dict[str, Any]:
        return {"S": matrix_to_json(self.s), "T": matrix_to_json(self.t)}


@dataclass(frozen=True)
class FredholmIndex:
    """a = dim ker S / (ker S ∩ Im T), b = dim ker T / (ker T ∩ Im S)."""

    a: int
    b: int

    @property
    def index(self) -> int:
        return self.a - self.b

    def __int__(self) -> int:
        return self.index


def fredholm_index(p: FredholmPairData) -> FredholmIndex:
    a = nullity(p.s) - intersection_dim(kernel(p.s), image(p.t))
    b = nullity(p.t) - intersection_dim(kernel(p.t), image(p.s))
    return FredholmIndex(a, b)


def rank_index(p: FredholmPairData) -> int:
    """dim X - dim Y + rank ST - rank TS; agrees with ``fredholm_index`` in finite dimension."""
    return p.dim_x - p.dim_y + rank(p.s * p.t) - rank(p.t * p.s)


@dataclass(frozen=True)
class ReducedPair:
    """(S̄, T̄) on X/Im(TS) and Y/Im(ST), with both indices."""

    pair: FredholmPairData
    original: FredholmIndex
    reduced: FredholmIndex


def reduced_pair(p: FredholmPairData) -> ReducedPair:
    """Pass to the quotients by Im(TS) and Im(ST); asserts the index is unchanged."""
    project_x, lift_x = quotient_map(image(p.t * p.s), p.dim_x)
    project_y, lift_y = quotient_map(image(p.s * p.t), p.dim_y)
    s_bar = project_y * p.s * lift_x if lift_x.cols and project_y.rows else Matrix.zeros(
        project_y.rows, lift_x.cols
    )
    t_bar = project_x * p.t * lift_y if lift_y.cols and project_x.rows else Matrix.zeros(
        project_x.rows, lift_y.cols
    )
    reduced = FredholmPairData(s_bar, t_bar)

    original, after = fredholm_index(p), fredholm_index(reduced)
    if original.index != after.index:
        raise IdentityFailed("Index changed under reduction", f"{original.index} vs {after.index}")
    if after.index != reduced.dim_x - reduced.dim_y:
        raise IdentityFailed(
            "Reduced index differs from dim X̄ - dim Ȳ",
            f"{after.index} vs {reduced.dim_x} - {reduced.dim_y}",
        )
    logger.debug(
        "Reduced %dx%d pair to %dx%d, index %d",
        p.dim_y, p.dim_x, reduced.dim_y, reduced.dim_x, after.index,
    )
    return ReducedPair(reduced, original, after)
