"""Root data of equal-rank pairs: roots, compact marking, Gram form and chambers."""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Any

from sympy import Matrix

from dirac_pairings.errors import (
    DatumLoadError,
    DiracPairingsError,
    InvalidRootSystem,
    NonDefiniteForm,
    OddNoncompactDimension,
)
from dirac_pairings.weights.lattice import Cover, Weight, bilinear
from dirac_pairings.weights.weyl import (
    WeylGroupElement,
    generate_group,
    reflect,
    reflection_matrix,
    rho_vectors,
)

logger = logging.getLogger(__name__)

# Doubled coordinates throughout: a root with actual coordinates (1, -1) is written (2, -2).
PRESETS: dict[str, dict[str, Any]] = {
    # sl(2,R), K = SO(2): one noncompact root pair.
    "sl2R": {
        "rank": 1,
        "gram": [[2]],
        "simple_roots": [[2]],
        "compact_flags": [False],
    },
    # su(2,1), K = S(U(2)xU(1)), coordinates on the fundamental weights of A2.
    "su21": {
        "rank": 2,
        "gram": [[2, 1], [1, 2]],
        "simple_roots": [[4, -2], [-2, 4]],
        "compact_flags": [True, False],
    },
    # sp(4,R), K = U(2), orthonormal coordinates e1, e2.
    "sp4R": {
        "rank": 2,
        "gram": [[1, 0], [0, 1]],
        "simple_roots": [[2, -2], [0, 4]],
        "compact_flags": [True, False],
    },
}


@dataclass(frozen=True)
class RootDatum:
    """Validated root datum with the chamber catalog of its Borel subalgebras containing t.

    Chamber 0 is the reference chamber b1; chamber i is the image of b1 under
    ``chamber_elements[i]``, so every sign sgn(w: b1 -> b) is read off directly.
    """

    name: str
    rank: int
    gram: tuple[tuple[int, ...], ...]
    roots: tuple[Weight, ...]
    compact_flags: tuple[bool, ...]
    simple_roots: tuple[Weight, ...]
    chamber_catalog: tuple[frozenset[Weight], ...]
    chamber_elements: tuple[WeylGroupElement, ...] = field(repr=False, compare=False)

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return bilinear(self.gram, a, b)

    def norm2(self, a: Weight) -> Fraction:
        return bilinear(self.gram, a, a)

    @cached_property
    def _flags(self) -> dict[Weight, bool]:
        return dict(zip(self.roots, self.compact_flags, strict=True))

    def is_compact(self, root: Weight) -> bool:
        return self._flags[root.on(Cover.K)]

    @property
    def compact_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r in self.roots if self._flags[r])

    @property
    def noncompact_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r in self.roots if not self._flags[r])

    @property
    def dim_p(self) -> int:
        return len(self.noncompact_roots)

    @property
    def chamber_count(self) -> int:
        return len(self.chamber_catalog)

    def positive_roots(self, chamber: int = 0) -> tuple[Weight, ...]:
        return tuple(sorted(self.chamber_catalog[chamber]))

    def positive_noncompact(self, chamber: int = 0) -> tuple[Weight, ...]:
        return tuple(r for r in self.positive_roots(chamber) if not self._flags[r])

    def simple_roots_of(self, chamber: int = 0) -> tuple[Weight, ...]:
        element = self.chamber_elements[chamber]
        return tuple(element.apply(r) for r in self.simple_roots)

    def chamber_index(self, positive: frozenset[Weight]) -> int:
        return self._chamber_lookup[positive]

    @cached_property
    def _chamber_lookup(self) -> dict[frozenset[Weight], int]:
        return {chamber: i for i, chamber in enumerate(self.chamber_catalog)}

    @cached_property
    def positive_compact_roots(self) -> tuple[Weight, ...]:
        """R_k^+: compact roots positive in the reference chamber."""
        return tuple(r for r in self.positive_roots(0) if self._flags[r])

    @cached_property
    def compact_simple_roots(self) -> tuple[Weight, ...]:
        return _simple_of(self.positive_compact_roots)

    @cached_property
    def compact_weyl_group(self) -> tuple[WeylGroupElement, ...]:
        generators = [reflection_matrix(self.gram, r) for r in self.compact_simple_roots]
        return tuple(generate_group(generators, self.rank))

    def compact_positive_system(self, chamber: int) -> frozenset[Weight]:
        return frozenset(r for r in self.chamber_catalog[chamber] if self._flags[r])

    @cached_property
    def rho(self) -> Weight:
        return rho_vectors(self, 0)[0]

    @cached_property
    def rho_c(self) -> Weight:
        return rho_vectors(self, 0)[1]

    @cached_property
    def rho_n(self) -> Weight:
        return rho_vectors(self, 0)[2]


def _simple_of(positives: Sequence[Weight]) -> tuple[Weight, ...]:
    """Positive roots that are not a sum of two positive roots."""
    pool = set(positives)
    sums = {a + b for a in positives for b in positives}
    return tuple(sorted(r for r in pool if r not in sums))


def _check_gram(rank: int, gram: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(gram) != rank or any(len(row) != rank for row in gram):
        raise NonDefiniteForm(f"Gram matrix must be {rank}x{rank}")
    if any(not isinstance(x, int) for row in gram for x in row):
        raise NonDefiniteForm("Gram matrix entries must be integers")
    matrix = Matrix(gram)
    if matrix != matrix.T:
        raise NonDefiniteForm("Gram matrix is not symmetric")
    if not matrix.is_positive_definite:
        raise NonDefiniteForm("Gram matrix is not positive definite")
    return tuple(tuple(row) for row in gram)


def _as_weight(rank: int, coords: Sequence[int]) -> Weight:
    if len(coords) != rank:
        raise InvalidRootSystem(f"Root {list(coords)} does not have {rank} coordinates")
    weight = Weight(tuple(int(c) for c in coords))
    if weight.is_zero():
        raise InvalidRootSystem("Zero is not a root")
    if any(c % 2 for c in weight.coords):
        raise InvalidRootSystem(f"Root {weight} is not on the root lattice (odd doubled coordinate)")
    return weight


def _simple_coefficients(basis: Matrix, root: Weight) -> list:
    try:
        solution, _ = basis.gauss_jordan_solve(Matrix(root.coords))
    except ValueError as e:
        raise InvalidRootSystem(f"Root {root} is not in the span of the simple roots") from e
    return list(solution)


def _roots_from_simple(
    gram: tuple[tuple[int, ...], ...], simple: list[Weight], flags: Sequence[bool]
) -> dict[Weight, bool]:
    """All roots as the orbit of the simple roots, marked by parity of noncompact coefficients."""
    if len(flags) != len(simple):
        raise InvalidRootSystem("compact_flags must give one flag per simple root")
    basis = Matrix([list(r.coords) for r in simple]).T
    if basis.rank() != len(simple):
        raise InvalidRootSystem("Simple roots are linearly dependent")
    marked: dict[Weight, bool] = {}
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        if root in marked:
            continue
        coefficients = _simple_coefficients(basis, root)
        if any(not c.is_integer for c in coefficients):
            raise InvalidRootSystem(f"Root {root} is not an integral combination of simple roots")
        noncompact_weight = sum(int(c) for c, f in zip(coefficients, flags, strict=True) if not f)
        marked[root] = noncompact_weight % 2 == 0
        frontier.extend(reflect(gram, s, root) for s in simple)
    return marked


def _positive_from_simple(simple: list[Weight], roots: Sequence[Weight]) -> frozenset[Weight]:
    basis = Matrix([list(r.coords) for r in simple]).T
    positive = set()
    for root in roots:
        if all(c >= 0 for c in _simple_coefficients(basis, root)):
            positive.add(root)
    return frozenset(positive)


def _lexicographic_positive(roots: Sequence[Weight]) -> frozenset[Weight]:
    return frozenset(r for r in roots if next(c for c in r.coords if c) > 0)


def _validate(
    gram: tuple[tuple[int, ...], ...], marked: Mapping[Weight, bool]
) -> None:
    noncompact = [r for r, compact in marked.items() if not compact]
    if len(noncompact) % 2:
        raise OddNoncompactDimension(f"dim p = {len(noncompact)} is odd")
    for root, compact in marked.items():
        if -root not in marked:
            raise InvalidRootSystem(f"Roots are not closed under negation at {root}")
        if marked[-root] != compact:
            raise InvalidRootSystem(f"Compact flags of {root} and {-root} disagree")
    for a in marked:
        for b in marked:
            if reflect(gram, a, b) not in marked:
                raise InvalidRootSystem(f"Reflection in {a} sends {b} outside the roots")
            total = a + b
            if total in marked and marked[total] != (marked[a] == marked[b]):
                raise InvalidRootSystem(
                    f"Compact marking is not a Z/2-grading: {a} + {b} = {total}"
                )


def _check_positive_system(positive: frozenset[Weight], roots: Sequence[Weight]) -> None:
    for root in roots:
        if (root in positive) == (-root in positive):
            raise InvalidRootSystem(f"Chamber must contain exactly one of {root}, {-root}")
    root_set = set(roots)
    for a in positive:
        for b in positive:
            if a + b in root_set and a + b not in positive:
                raise InvalidRootSystem("Chamber is not closed under addition")


def build_root_datum(config: str | Mapping[str, Any]) -> RootDatum:
    """Validate a preset name or a config mapping and enumerate its chambers."""
    if isinstance(config, str):
        if config not in PRESETS:
            raise InvalidRootSystem(
                f"Unknown preset {config!r}; available: {', '.join(sorted(PRESETS))}"
            )
        return _preset(config)
    return _build(str(config.get("name", "custom")), config)


@lru_cache
def _preset(name: str) -> RootDatum:
    return _build(name, PRESETS[name])


def _build(name: str, config: Mapping[str, Any]) -> RootDatum:
    rank = int(config["rank"])
    if rank < 1:
        raise InvalidRootSystem("rank must be positive")
    gram = _check_gram(rank, config["gram"])
    flags = [bool(f) for f in config["compact_flags"]]

    if "roots" not in config:
        simple = [_as_weight(rank, r) for r in config["simple_roots"]]
        marked = _roots_from_simple(gram, simple, flags)
        _validate(gram, marked)
        positive = _positive_from_simple(simple, list(marked))
    else:
        roots = [_as_weight(rank, r) for r in config["roots"]]
        if len(flags) != len(roots):
            raise InvalidRootSystem("compact_flags must give one flag per root")
        if len(set(roots)) != len(roots):
            raise InvalidRootSystem("Duplicate roots")
        marked = dict(zip(roots, flags, strict=True))
        _validate(gram, marked)
        if "simple_roots" in config:
            simple = [_as_weight(rank, r) for r in config["simple_roots"]]
            positive = _positive_from_simple(simple, roots)
        else:
            positive = _lexicographic_positive(roots)
            simple = list(_simple_of(sorted(positive)))

    roots = tuple(sorted(marked))
    generators = [reflection_matrix(gram, r) for r in simple]
    elements = generate_group(generators, rank)
    catalog = []
    for element in elements:
        chamber = frozenset(element.apply(r) for r in positive)
        _check_positive_system(chamber, roots)
        catalog.append(chamber)
    if len(set(catalog)) != len(catalog):
        raise InvalidRootSystem("Weyl group does not act simply transitively on chambers")

    datum = RootDatum(
        name=name,
        rank=rank,
        gram=gram,
        roots=roots,
        compact_flags=tuple(marked[r] for r in roots),
        simple_roots=tuple(simple),
        chamber_catalog=tuple(catalog),
        chamber_elements=tuple(elements),
    )
    logger.info(
        "Built root datum %s: rank %d, %d roots, dim p = %d, %d chambers",
        name,
        rank,
        len(roots),
        datum.dim_p,
        len(catalog),
    )
    return datum


def datum_from_dict(data: Mapping[str, Any]) -> RootDatum:
    try:
        return build_root_datum(data)
    except DiracPairingsError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise DatumLoadError(f"Malformed root datum: {e}") from e


def load_root_datum(path: str | Path) -> RootDatum:
    """Read a root datum from a JSON file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise DatumLoadError(f"Cannot read root datum {path}: {e}") from e
    if not isinstance(data, dict):
        raise DatumLoadError(f"Root datum {path} must be a JSON object")
    data.setdefault("name", Path(path).stem)
    return datum_from_dict(data)


def datum_to_dict(datum: RootDatum) -> dict[str, Any]:
    """Canonical JSON-able form: roots sorted, chambers listed by index."""
    return {
        "name": datum.name,
        "rank": datum.rank,
        "gram": [list(row) for row in datum.gram],
        "roots": [r.to_json() for r in datum.roots],
        "compact_flags": list(datum.compact_flags),
        "simple_roots": [r.to_json() for r in datum.simple_roots],
        "chambers": [[r.to_json() for r in sorted(c)] for c in datum.chamber_catalog],
    }
