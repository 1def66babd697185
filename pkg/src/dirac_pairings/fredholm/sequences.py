"""Additivity of the index along short exact sequences of pairs.

The diagram is two short exact columns

    0 -> X1 -α-> X2 -β-> X3 -> 0        0 -> Y1 -γ-> Y2 -δ-> Y3 -> 0

with pairs (S_j, T_j) between X_j and Y_j commuting with the column maps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy import Matrix

from dirac_pairings.errors import (
    DiagramNotCommutative,
    HypothesisSTnotZero,
    SequenceNotExact,
    ShapeMismatch,
)
from dirac_pairings.fredholm.linalg import is_zero, nullity, rank
from dirac_pairings.fredholm.pairs import FredholmPairData, fredholm_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionDiagram:
    pairs: tuple[FredholmPairData, FredholmPairData, FredholmPairData]
    alpha: Matrix
    beta: Matrix
    gamma: Matrix
    delta: Matrix


@dataclass(frozen=True)
class AdditivityReport:
    indices: tuple[int, int, int]

    @property
    def alternating_sum(self) -> int:
        first, middle, last = self.indices
        return first - middle + last

    @property
    def holds(self) -> bool:
        return self.alternating_sum == 0


def _check_exact(first: Matrix, second: Matrix, label: str) -> None:
    if first.rows != second.cols:
        raise ShapeMismatch(f"{label}: maps do not compose")
    if rank(first) != first.cols:
        raise SequenceNotExact(f"{label}: first map is not injective")
    if rank(second) != second.rows:
        raise SequenceNotExact(f"{label}: second map is not surjective")
    if not is_zero(second * first) or rank(first) != nullity(second):
        raise SequenceNotExact(f"{label}: image of the first map is not the kernel of the second")


def _check_square(left: Matrix, right: Matrix, label: str) -> None:
    if left.shape != right.shape or not is_zero(left - right):
        raise DiagramNotCommutative(f"{label} does not commute")


def check_additivity(diagram: ExtensionDiagram) -> AdditivityReport:
    """ind(S1,T1) - ind(S2,T2) + ind(S3,T3), after checking every hypothesis."""
    p1, p2, p3 = diagram.pairs
    for j, p in enumerate(diagram.pairs, start=1):
        if not is_zero(p.s * p.t) or not is_zero(p.t * p.s):
            raise HypothesisSTnotZero(f"Pair {j} has ST != 0 or TS != 0")
    _check_exact(diagram.alpha, diagram.beta, "X column")
    _check_exact(diagram.gamma, diagram.delta, "Y column")
    if (diagram.alpha.cols, diagram.gamma.cols) != (p1.dim_x, p1.dim_y):
        raise ShapeMismatch("Column maps do not start at the first pair")

    _check_square(diagram.gamma * p1.s, p2.s * diagram.alpha, "γ S1 = S2 α")
    _check_square(diagram.delta * p2.s, p3.s * diagram.beta, "δ S2 = S3 β")
    _check_square(diagram.alpha * p1.t, p2.t * diagram.gamma, "α T1 = T2 γ")
    _check_square(diagram.beta * p2.t, p3.t * diagram.delta, "β T2 = T3 δ")

    report = AdditivityReport(tuple(fredholm_index(p).index for p in diagram.pairs))
    logger.debug("Additivity indices %s, alternating sum %d", report.indices, report.alternating_sum)
    return report
