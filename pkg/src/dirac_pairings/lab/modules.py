"""Harish-Chandra modules given by explicit matrices."""

from __future__ import annotations

import json
import logging
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any

from sympy import Matrix, eye, zeros

from dirac_pairings.errors import DatumLoadError, IdentityFailed, ShapeMismatch
from dirac_pairings.fredholm.linalg import exact_matrix, is_zero, matrix_to_json
from dirac_pairings.lab.algebra import LabAlgebra, sl2_algebra
from dirac_pairings.weights import Cover, VirtualCharacter, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MatrixHCModule:
    """A finite-dimensional (g, K)-module with a weight basis.

    ``weights[k]`` is the Cartan eigenvalue vector of basis vector k and ``actions``
    maps every basis name of g to its matrix.
    """

    algebra: LabAlgebra
    name: str
    weights: tuple[tuple[int, ...], ...]
    actions: Mapping[str, Matrix]
    infinitesimal_character: tuple[int, ...]

    def __post_init__(self):
        n = len(self.weights)
        missing = set(self.algebra.basis) - set(self.actions)
        if missing:
            raise ShapeMismatch(f"Module {self.name} has no action for {sorted(missing)}")
        for key, m in self.actions.items():
            if m.shape != (n, n):
                raise ShapeMismatch(f"Action of {key} on {self.name} is {m.shape}, expected {n}x{n}")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def act(self, v: Matrix) -> Matrix:
        """pi(v) for a vector of g in basis coordinates."""
        out = zeros(self.dim, self.dim)
        for i, name in enumerate(self.algebra.basis):
            if v[i] != 0:
                out += v[i] * self.actions[name]
        return out

    @cached_property
    def casimir(self) -> Matrix:
        """sum_i pi(Y_i) pi(Y^i) over a basis of g and its B-dual."""
        a = self.algebra
        out = zeros(self.dim, self.dim)
        for i in range(a.dim):
            out += self.act(a.unit(i)) * self.act(a.dual_basis[i])
        return out

    def k_character(self) -> VirtualCharacter:
        """Restriction to the (abelian) K, one K-type per weight."""
        counts = Counter(Weight.of(*w) for w in self.weights)
        return VirtualCharacter.from_terms(dict(counts), Cover.K)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "dimension": self.dim,
            "weights": [list(w) for w in self.weights],
            "actions": {k: matrix_to_json(m) for k, m in self.actions.items()},
            "infinitesimal_character": list(self.infinitesimal_character),
        }


def validate_module(module: MatrixHCModule) -> None:
    """Bracket relations, weight grading and the Casimir scalar."""
    if module.dim == 0:
        return
    a = module.algebra
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            x, y = module.act(a.unit(i)), module.act(a.unit(j))
            if x * y - y * x != module.act(a.bracket(a.unit(i), a.unit(j))):
                raise IdentityFailed(
                    f"{module.name} does not respect [{a.basis[i]}, {a.basis[j]}]"
                )
    diagonal = [Matrix.diag(*[w[k] for w in module.weights]) for k in range(a.rank)]
    for k, c in enumerate(a.cartan):
        if module.actions[a.basis[c]] != diagonal[k]:
            raise IdentityFailed(f"{module.name}: {a.basis[c]} is not diagonal with the given weights")
    for index, root in a.root_of.items():
        action = module.actions[a.basis[index]]
        for col in range(module.dim):
            for row in range(module.dim):
                if action[row, col] == 0:
                    continue
                shifted = tuple(w + r for w, r in zip(module.weights[col], root, strict=True))
                if module.weights[row] != shifted:
                    raise IdentityFailed(
                        f"{module.name}: {a.basis[index]} does not shift weights by {root}"
                    )
    expected = a.norm2(module.infinitesimal_character) - a.norm2(a.rho)
    if not is_zero(module.casimir - expected * eye(module.dim)):
        raise IdentityFailed(
            f"{module.name}: Casimir is not |Lambda|^2 - |rho|^2 = {expected}",
        )


def finite_dimensional_module(n: int, algebra: LabAlgebra | None = None) -> MatrixHCModule:
    """F_n of sl(2): h v_k = (n - 2k) v_k, f v_k = v_{k+1}, e v_k = k(n - k + 1) v_{k-1}."""
    if n < 0:
        raise ValueError(f"Highest weight must be non-negative, got {n}")
    algebra = algebra or sl2_algebra()
    size = n + 1
    h = Matrix.diag(*[n - 2 * k for k in range(size)])
    e, f = zeros(size, size), zeros(size, size)
    for k in range(size):
        if k + 1 < size:
            f[k + 1, k] = 1
        if k > 0:
            e[k - 1, k] = k * (n - k + 1)
    module = MatrixHCModule(
        algebra,
        f"F{n}",
        tuple((n - 2 * k,) for k in range(size)),
        {"h": h, "e": e, "f": f},
        (n + 1,),
    )
    validate_module(module)
    return module


def module_from_dict(data: Mapping[str, Any], algebra: LabAlgebra | None = None) -> MatrixHCModule:
    algebra = algebra or sl2_algebra()
    try:
        weights = tuple(tuple(int(c) for c in w) for w in data["weights"])
        actions = {k: exact_matrix(v, cols=len(weights)) for k, v in data["actions"].items()}
        infinitesimal = tuple(int(c) for c in data["infinitesimal_character"])
    except (KeyError, TypeError, ValueError) as e:
        raise DatumLoadError(f"Malformed module description: {e}") from e
    if "dimension" in data and int(data["dimension"]) != len(weights):
        raise DatumLoadError(f"dimension {data['dimension']} but {len(weights)} weights")
    module = MatrixHCModule(algebra, str(data.get("name", "X")), weights, actions, infinitesimal)
    validate_module(module)
    return module


def load_matrix_module(path: str | Path, algebra: LabAlgebra | None = None) -> MatrixHCModule:
    """Read a module from JSON: dimension, weights, actions (rational entries as "p/q")."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise DatumLoadError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DatumLoadError(f"{path} is not valid JSON: {e}") from e
    data.setdefault("name", path.stem)
    module = module_from_dict(data, algebra)
    logger.info("Loaded module %s of dimension %d from %s", module.name, module.dim, path)
    return module


def modules_up_to(n: int, algebra: LabAlgebra | None = None) -> Sequence[MatrixHCModule]:
    return [finite_dimensional_module(k, algebra) for k in range(n + 1)]
