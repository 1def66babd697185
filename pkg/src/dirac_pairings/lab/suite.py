"""Lab runs over F_0..F_max plus any loaded modules, for the CLI."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from sympy import Matrix

from dirac_pairings.errors import DiracPairingsError, UsageError
from dirac_pairings.lab.algebra import LabAlgebra, lab_algebra
from dirac_pairings.lab.clifford import SpinorMatrices, build_spinor_matrices
from dirac_pairings.lab.dirac import (
    dirac_cohomology,
    dirac_matrix,
    verify_parthasarathy,
    verify_scalar_action,
)
from dirac_pairings.lab.ext import ext_complex
from dirac_pairings.lab.homspaces import index_ST
from dirac_pairings.lab.modules import MatrixHCModule, modules_up_to
from dirac_pairings.lab.split import conjecture_check, split_operators
from dirac_pairings.spin import spinor_modules
from dirac_pairings.tables import gram_table
from dirac_pairings.weights import build_root_datum, tensor

logger = logging.getLogger(__name__)

LAB_RUNS = ("identities", "conjecture")

Row = dict[str, Any]


@dataclass
class LabResult:
    run: str
    group: str
    rows: list[Row] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "run": self.run,
            "group": self.group,
            "rows": self.rows,
            "failures": self.failures,
            "ok": self.ok,
        }


def _second_basis(algebra: LabAlgebra) -> list[Matrix]:
    p = algebra.p_basis
    m = algebra.m
    return [p[i] + p[m + i] for i in range(m)] + [p[i] - p[m + i] for i in range(m)]


def module_identities(module: MatrixHCModule, spinors: SpinorMatrices) -> Row:
    """Single-module checks: Parthasarathy, the scalar action, basis independence, the index."""
    datum = build_root_datum(module.algebra.datum_name)
    verify_parthasarathy(module, spinors)
    scalars = verify_scalar_action(module, spinors)
    same_d = dirac_matrix(module, spinors) == dirac_matrix(module, spinors, _second_basis(module.algebra))
    cohomology = dirac_cohomology(module, spinors)
    pair_s = spinor_modules(datum)
    restriction = module.k_character()
    expected = tensor(datum, restriction, pair_s.s_plus) - tensor(datum, restriction, pair_s.s_minus)
    return {
        "module": module.name,
        "D_basis_independent": same_d,
        "D_squared": {str(list(w)): str(v) for w, v in sorted(scalars.items())},
        "cohomology": cohomology.to_json(),
        "index_matches_character": cohomology.index.index == expected,
    }


def _pair_identities(x: MatrixHCModule, y: MatrixHCModule, spinors: SpinorMatrices) -> Row:
    st = index_ST(x, y, spinors)
    ext = ext_complex(x, y, spinors)
    split = split_operators(x, y, spinors)
    return {
        "X": x.name,
        "Y": y.name,
        "ST": st.to_json(),
        "ext_dims": ext.dims,
        "ext_cohomology": ext.cohomology,
        "EP": ext.euler,
        "split": split.to_json(),
        "holds": st.holds and split.holds and ext.euler == st.dirac_pairing,
    }


def _guarded(label: str, fn: Callable[[], Row]) -> tuple[Row | None, str | None]:
    try:
        row = fn()
    except DiracPairingsError as e:
        logger.warning("Lab check %s failed: %s", label, e)
        return None, f"{label}: {type(e).__name__}: {e}"
    failed = (
        row.get("holds") is False
        or row.get("D_basis_independent") is False
        or row.get("index_matches_character") is False
    )
    return row, f"{label}: identity failed" if failed else None


def _collect(result: LabResult, outcomes: Sequence[tuple[Row | None, str | None]]) -> None:
    for row, failure in outcomes:
        if row is not None:
            result.rows.append(row)
        if failure is not None:
            result.failures.append(failure)


def _setup(
    group: str, n_max: int, extra: Sequence[MatrixHCModule]
) -> tuple[SpinorMatrices, list[MatrixHCModule]]:
    algebra = lab_algebra(group)
    for module in extra:
        if module.algebra.datum_name != algebra.datum_name:
            raise UsageError(f"Module {module.name} is not a module for {group}")
    return build_spinor_matrices(algebra), [*modules_up_to(n_max, algebra), *extra]


def _pairs(
    result: LabResult,
    modules: Sequence[MatrixHCModule],
    entry: Callable[[MatrixHCModule, MatrixHCModule], Row],
    threads: int | None,
) -> None:
    def cell(x: MatrixHCModule, y: MatrixHCModule) -> tuple[Row | None, str | None]:
        return _guarded(f"{x.name}, {y.name}", lambda: entry(x, y))

    table = gram_table(modules, cell, threads)
    _collect(result, [outcome for row in table for outcome in row])


def run_identities(
    group: str = "sl2R",
    n_max: int = 3,
    extra: Sequence[MatrixHCModule] = (),
    threads: int | None = None,
) -> LabResult:
    """Module identities for each module, pair identities for every ordered pair."""
    spinors, modules = _setup(group, n_max, extra)
    result = LabResult("identities", group)
    logger.info("Lab identities on %s for %d modules", group, len(modules))
    _collect(result, [_guarded(m.name, lambda m=m: module_identities(m, spinors)) for m in modules])
    _pairs(result, modules, lambda x, y: _pair_identities(x, y, spinors), threads)
    return result


def run_conjecture(
    group: str = "sl2R",
    n_max: int = 3,
    extra: Sequence[MatrixHCModule] = (),
    threads: int | None = None,
) -> LabResult:
    """ind(d), ind(𝒟), EP and the Dirac pairing for every ordered pair."""
    spinors, modules = _setup(group, n_max, extra)
    result = LabResult("conjecture", group)
    logger.info("Lab index comparison on %s for %d modules", group, len(modules))
    _pairs(result, modules, lambda x, y: conjecture_check(x, y, spinors).to_json(), threads)
    return result


def run_lab(
    run: str,
    group: str = "sl2R",
    n_max: int = 3,
    extra: Sequence[MatrixHCModule] = (),
    threads: int | None = None,
) -> LabResult:
    if run == "identities":
        return run_identities(group, n_max, extra, threads)
    if run == "conjecture":
        return run_conjecture(group, n_max, extra, threads)
    raise UsageError(f"Unknown lab run {run!r}; choose from {', '.join(LAB_RUNS)}")
