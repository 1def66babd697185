"""Command handlers: each takes the parsed arguments and returns a Report."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable
from dataclasses import dataclass
from itertools import product
from typing import Any

from dirac_pairings.cli.reports import Report, Table
from dirac_pairings.config import get_settings
from dirac_pairings.elliptic import verify_dirac_equals_elliptic
from dirac_pairings.errors import UsageError
from dirac_pairings.fredholm import run_suites
from dirac_pairings.lab import lab_algebra, load_matrix_module, perturbation_exports, run_lab
from dirac_pairings.spin import (
    DiracIndex,
    HCParameter,
    ParameterKind,
    dirac_index_combination,
    dirac_index_finite_dim,
    dirac_index_limits,
    dirac_pairing,
    ds_family,
    ep_pairing_finite_dim,
    limit_combination,
)
from dirac_pairings.tables import gram_table
from dirac_pairings.weights import (
    Cover,
    RootDatum,
    Weight,
    build_root_datum,
    datum_to_dict,
    fundamental_weights,
    load_root_datum,
    rho_vectors,
    weyl_group,
)
from dirac_pairings.weights.weyl import WeylKind

logger = logging.getLogger(__name__)


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError as e:
        raise UsageError(f"Cannot read range {text!r}; expected a..b") from e
    if low > high:
        raise UsageError(f"Empty range {text!r}")
    return list(range(low, high + 1))


def parse_weight(text: str, rank: int, cover: Cover = Cover.K) -> Weight:
    """Comma-separated doubled coordinates."""
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise UsageError(f"Cannot read weight {text!r}; expected comma-separated integers") from e
    if len(coords) != rank:
        raise UsageError(f"Weight {text!r} has {len(coords)} coordinates, rank is {rank}")
    return Weight.of(*coords, cover=cover)


def resolve_datum(args: argparse.Namespace) -> RootDatum:
    if args.datum:
        return load_root_datum(args.datum)
    return build_root_datum(args.group)


def _inputs(args: argparse.Namespace, datum: RootDatum | None = None, **extra: Any) -> dict[str, Any]:
    skip = {"handler", "format", "output", "log_level", "timing"}
    inputs = {k: v for k, v in vars(args).items() if k not in skip and v not in (None, [])}
    if datum is not None:
        inputs["group"] = datum.name
    inputs.update(extra)
    return inputs


@dataclass(frozen=True)
class Item:
    """One module named on the command line, with its Dirac index."""

    label: str
    index: DiracIndex
    highest_weight: Weight | None = None
    parameter: HCParameter | None = None


def finite_dimensional_weights(datum: RootDatum, args: argparse.Namespace) -> list[Weight]:
    weights = []
    if args.findim:
        omegas = fundamental_weights(datum)
        for coefficients in product(parse_range(args.findim), repeat=len(omegas)):
            hw = Weight.zero(datum.rank)
            for c, omega in zip(coefficients, omegas, strict=True):
                hw = hw + omega.scaled(c)
            weights.append(hw)
    weights.extend(parse_weight(text, datum.rank) for text in args.hw or [])
    return weights


def _parameters(datum: RootDatum, args: argparse.Namespace) -> list[HCParameter]:
    params = []
    if args.ds:
        for n in parse_range(args.ds):
            params.extend(ds_family(datum, n))
    if args.chi and args.kind != "combination":
        chi = parse_weight(args.chi, datum.rank, Cover.SPIN)
        params.append(HCParameter(chi, args.chamber, ParameterKind(args.kind)))
    return params


def collect_items(datum: RootDatum, args: argparse.Namespace) -> list[Item]:
    items = [
        Item(f"F{hw}", dirac_index_finite_dim(datum, hw), highest_weight=hw)
        for hw in finite_dimensional_weights(datum, args)
    ]
    items.extend(
        Item(str(p), dirac_index_limits(datum, p), parameter=p) for p in _parameters(datum, args)
    )
    if args.chi and args.kind == "combination":
        chi = parse_weight(args.chi, datum.rank, Cover.SPIN)
        combination = limit_combination(datum, chi, args.chamber)
        items.append(Item(f"X{chi}@b{args.chamber}", dirac_index_combination(datum, combination)))
    if not items:
        raise UsageError("Nothing to compute; give --findim, --hw, --ds or --chi")
    logger.info("Collected %d modules on %s", len(items), datum.name)
    return items


def _gram(labels: list[str], gram: list[list[Any]]) -> Table:
    return [["", *labels], *([label, *row] for label, row in zip(labels, gram, strict=True))]


def root_data_show(args: argparse.Namespace) -> Report:
    datum = resolve_datum(args)
    chambers = []
    for chamber in range(datum.chamber_count):
        rho, rho_c, rho_n = rho_vectors(datum, chamber)
        chambers.append(
            {"chamber": chamber, "rho": rho.to_json(), "rho_c": rho_c.to_json(), "rho_n": rho_n.to_json()}
        )
    result = datum_to_dict(datum) | {
        "dim_p": datum.dim_p,
        "weyl_order": len(weyl_group(datum, WeylKind.FULL)),
        "compact_weyl_order": len(weyl_group(datum, WeylKind.COMPACT)),
        "rho": chambers,
    }
    table = [["chamber", "rho", "rho_c", "rho_n"]]
    table.extend([c["chamber"], c["rho"], c["rho_c"], c["rho_n"]] for c in chambers)
    return Report("root-data show", _inputs(args, datum), result, table=table)


def dirac_index(args: argparse.Namespace) -> Report:
    datum = resolve_datum(args)
    items = collect_items(datum, args)
    result = [{"module": item.label, "index": item.index.index.to_json()} for item in items]
    table: Table = [["module", "K~ type", "coefficient"]]
    for item in items:
        table.extend([item.label, hw.to_json(), c] for hw, c in item.index.index)
    identities = [
        (f"{item.label}: index is a single K~ type", len(item.index.index) == 1)
        for item in items
        if item.parameter is not None and item.parameter.kind is ParameterKind.DISCRETE_SERIES
    ]
    return Report("dirac-index", _inputs(args, datum), result, identities, table)


def _ep_gram(datum: RootDatum, weights: list[Weight], threads: int) -> list[list[int]]:
    return gram_table(weights, lambda a, b: ep_pairing_finite_dim(datum, a, b), threads)


def pair_dirac(args: argparse.Namespace) -> Report:
    datum = resolve_datum(args)
    threads = get_settings().threads
    items = collect_items(datum, args)
    labels = [item.label for item in items]
    gram = gram_table([item.index for item in items], dirac_pairing, threads)
    identities = []
    if all(i.parameter is not None and i.parameter.kind is ParameterKind.DISCRETE_SERIES for i in items):
        n = len(items)
        identity = [[int(i == j) for j in range(n)] for i in range(n)]
        identities.append(("Gram matrix of discrete series is the identity", gram == identity))
    if all(i.highest_weight is not None for i in items):
        ep = _ep_gram(datum, [i.highest_weight for i in items], threads)
        identities.append(("Dirac pairing = Euler-Poincare pairing", gram == ep))
    result = {"modules": labels, "gram": gram}
    return Report("pair dirac", _inputs(args, datum), result, identities, _gram(labels, gram))


def pair_elliptic(args: argparse.Namespace) -> Report:
    datum = resolve_datum(args)
    if args.findim or args.hw:
        raise UsageError("pair elliptic takes discrete series parameters: --ds or --chi")
    if args.kind == "combination":
        raise UsageError("pair elliptic takes single parameters; use --kind ds or limit")
    params = _parameters(datum, args)
    if not params:
        raise UsageError("Nothing to pair; give --ds or --chi")
    report = verify_dirac_equals_elliptic(datum, params, get_settings().threads)
    result = report.to_json()
    labels = [str(p) for p in params]
    identities = [("Dirac Gram matrix = elliptic Gram matrix", report.equal)]
    return Report(
        "pair elliptic", _inputs(args, datum), result, identities, _gram(labels, result["gram_elliptic"])
    )


def pair_ep(args: argparse.Namespace) -> Report:
    datum = resolve_datum(args)
    if args.ds or args.chi:
        raise UsageError("pair ep takes finite-dimensional modules: --findim or --hw")
    threads = get_settings().threads
    weights = finite_dimensional_weights(datum, args)
    if not weights:
        raise UsageError("Nothing to pair; give --findim or --hw")
    labels = [f"F{hw}" for hw in weights]
    gram = _ep_gram(datum, weights, threads)
    indices = [dirac_index_finite_dim(datum, hw) for hw in weights]
    dirac = gram_table(indices, dirac_pairing, threads)
    identities = [("Euler-Poincare pairing = Dirac pairing", gram == dirac)]
    result = {"modules": labels, "gram": gram}
    return Report("pair ep", _inputs(args, datum), result, identities, _gram(labels, gram))


PAIRINGS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "dirac": pair_dirac,
    "elliptic": pair_elliptic,
    "ep": pair_ep,
}


def pair(args: argparse.Namespace) -> Report:
    return PAIRINGS[args.pairing](args)


def fredholm_check(args: argparse.Namespace) -> Report:
    seed = get_settings().default_seed if args.seed is None else args.seed
    if args.instances is not None and args.instances < 1:
        raise UsageError("--instances must be positive")
    exports = perturbation_exports(args.lab_exports) if args.suite in ("perturbation", "all") else []
    results = run_suites(args.suite, seed, args.instances, exports)
    table: Table = [["suite", "seed", "instances", "exported", "passed", "skipped", "failed"]]
    table.extend(
        [r.name, r.seed, r.instances, r.exported, r.passed, r.skipped, len(r.failures)] for r in results
    )
    identities = [(f"{r.name} suite", r.ok) for r in results]
    result = [r.to_json() for r in results]
    return Report("fredholm check", _inputs(args, seed=seed), result, identities, table)


def _row_label(row: dict[str, Any]) -> str:
    return row["module"] if "module" in row else f"{row['X']}, {row['Y']}"


def lab(args: argparse.Namespace) -> Report:
    if args.datum:
        raise UsageError("The lab works on group presets only; use --group")
    settings = get_settings()
    n_max = settings.lab_max if args.max is None else args.max
    if n_max < 0:
        raise UsageError("--max must be non-negative")
    algebra = lab_algebra(args.group)
    extra = [load_matrix_module(path, algebra) for path in args.module or []]
    result = run_lab(args.run, args.group, n_max, extra, settings.threads)

    failed = {failure.split(": ", 1)[0] for failure in result.failures}
    labels = [_row_label(row) for row in result.rows]
    identities = [(label, label not in failed) for label in labels]
    identities.extend((failure, False) for failure in result.failures if failure.split(": ", 1)[0] not in labels)

    pairs = [row for row in result.rows if "X" in row]
    if args.run == "conjecture":
        table: Table = [["X", "Y", "ind d", "ind D", "EP", "EP (weights)", "Dirac", "holds"]]
        table.extend(
            [r["X"], r["Y"], r["ind_d"], r["ind_script_D"], r["EP"], r["EP_weights"], r["dirac"], r["holds"]]
            for r in pairs
        )
    else:
        table = [["X", "Y", "Ext dims", "EP", "ind(S, T)", "Dirac", "holds"]]
        table.extend(
            [r["X"], r["Y"], r["ext_dims"], r["EP"], r["ST"]["index"], r["ST"]["dirac_pairing"], r["holds"]]
            for r in pairs
        )
    inputs = _inputs(args, max=n_max)
    return Report(f"lab {args.run}", inputs, result.to_json(), identities, table)
