"""Seeded property suites over random Fredholm instances."""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from sympy import Matrix

from dirac_pairings.errors import DiracPairingsError, SemisimplicityFails, UsageError
from dirac_pairings.fredholm.complexes import euler_via_pair
from dirac_pairings.fredholm.generators import (
    extension_diagram,
    perturbation_pair,
    random_complex,
    random_matrix,
    random_pair,
)
from dirac_pairings.fredholm.linalg import nullity, rank
from dirac_pairings.fredholm.pairs import FredholmPairData, fredholm_index, rank_index, reduced_pair
from dirac_pairings.fredholm.perturbation import SuperOperator, perturbed_index
from dirac_pairings.fredholm.sequences import check_additivity

logger = logging.getLogger(__name__)

SUITES = ("definition", "euler", "reduction", "additivity", "perturbation")

DEFAULT_INSTANCES = {
    "definition": 100,
    "euler": 200,
    "reduction": 100,
    "additivity": 100,
    "perturbation": 50,
}

MAX_DIM = 8

Export = tuple[str, SuperOperator, SuperOperator]


class _Skip(Exception):
    """The instance does not meet a hypothesis of the statement under test."""


@dataclass
class SuiteResult:
    name: str
    seed: int
    instances: int
    passed: int = 0
    skipped: int = 0
    exported: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "seed": self.seed,
            "instances": self.instances,
            "passed": self.passed,
            "skipped": self.skipped,
            "exported": self.exported,
            "failures": self.failures,
            "ok": self.ok,
        }


def _invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, n, n, max_rank=n)
        if rank(m) == n:
            return m


def _definition(rng: random.Random) -> str | None:
    p = random_pair(rng)
    if fredholm_index(p).index != rank_index(p):
        return f"index {fredholm_index(p).index} vs rank formula {rank_index(p)}"
    # T = 0: the index of S as an operator
    zero_t = FredholmPairData(p.s, Matrix.zeros(p.dim_x, p.dim_y))
    corank = p.dim_y - rank(p.s)
    if fredholm_index(zero_t).index != nullity(p.s) - corank:
        return "T = 0 does not give nullity(S) - corank(S)"
    # simultaneous change of basis on X and Y
    g, h = _invertible(rng, p.dim_x), _invertible(rng, p.dim_y)
    conjugated = FredholmPairData(h * p.s * g.inv(), g * p.t * h.inv()) if p.dim_x and p.dim_y else p
    if fredholm_index(conjugated) != fredholm_index(p):
        return "index changed under a change of basis"
    return None


def _euler(rng: random.Random) -> str | None:
    euler_via_pair(random_complex(rng, length=4, max_dim=MAX_DIM))
    return None


def _reduction(rng: random.Random) -> str | None:
    reduced_pair(random_pair(rng, max_dim=MAX_DIM))
    return None


def _additivity(rng: random.Random) -> str | None:
    report = check_additivity(extension_diagram(rng))
    if not report.holds:
        return f"indices {report.indices} sum to {report.alternating_sum}"
    return None


def _perturbation(rng: random.Random) -> str | None:
    return _perturbed(*perturbation_pair(rng))


def _perturbed(d: SuperOperator, partial: SuperOperator) -> str | None:
    try:
        report = perturbed_index(d, partial)
    except SemisimplicityFails as e:
        raise _Skip(str(e)) from e
    if not report.holds:
        return f"ind F = {report.index_f} but ind d = {report.index_d}"
    if report.kernel_index != report.index_f:
        return f"ker F² index {report.kernel_index} differs from ind F = {report.index_f}"
    return None


_CHECKS: dict[str, Callable[[random.Random], str | None]] = {
    "definition": _definition,
    "euler": _euler,
    "reduction": _reduction,
    "additivity": _additivity,
    "perturbation": _perturbation,
}


def _record(result: SuiteResult, label: str, check: Callable[[], str | None]) -> None:
    try:
        failure = check()
    except _Skip as e:
        result.skipped += 1
        logger.debug("%s skipped: %s", label, e)
        return
    except DiracPairingsError as e:
        failure = f"{type(e).__name__}: {e}"
    if failure is None:
        result.passed += 1
    else:
        result.failures.append(f"{label}: {failure}")
        logger.warning("%s suite %s failed: %s", result.name, label, failure)


def run_suite(
    name: str, seed: int, instances: int | None = None, exports: Sequence[Export] = ()
) -> SuiteResult:
    """Run random checks of one suite from a fixed seed.

    ``instances`` defaults to ``DEFAULT_INSTANCES[name]``. ``exports`` are labelled
    (d, ∂) pairs produced elsewhere (the lab) and are checked by the perturbation
    suite before its random instances; they count towards ``instances``.
    """
    if name not in _CHECKS:
        raise UsageError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    if instances is None:
        instances = DEFAULT_INSTANCES[name]
    if instances < 1:
        raise UsageError(f"instances must be positive, got {instances}")
    check = _CHECKS[name]
    exports = exports if name == "perturbation" else ()
    rng = random.Random(f"{name}:{seed}")
    result = SuiteResult(name, seed, max(instances, len(exports)), exported=len(exports))
    logger.info("Running %s suite: seed %d, %d instances", name, seed, result.instances)
    for label, d, partial in exports:
        _record(result, label, lambda d=d, partial=partial: _perturbed(d, partial))
    for i in range(result.instances - len(exports)):
        _record(result, f"instance {i}", lambda: check(rng))
    if result.skipped:
        logger.warning(
            "%s suite skipped %d of %d instances (semisimplicity not met)",
            name, result.skipped, result.instances,
        )
    logger.info("%s suite: %d passed, %d failed", name, result.passed, len(result.failures))
    return result


def run_suites(
    name: str, seed: int, instances: int | None = None, exports: Sequence[Export] = ()
) -> list[SuiteResult]:
    """One suite, or every suite for ``all``."""
    names = SUITES if name == "all" else (name,)
    return [run_suite(n, seed, instances, exports) for n in names]
