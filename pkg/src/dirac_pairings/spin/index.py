"""Dirac indices: finite-dimensional modules, admissible modules and (limits of) discrete series."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import Matrix

from dirac_pairings.errors import IdentityFailed, InvalidParameter, UnboundedProvider
from dirac_pairings.spin.parameters import (
    HCParameter,
    LimitCombination,
    ParameterKind,
    normalize_parameter,
)
from dirac_pairings.spin.spinors import SpinorPair, spinor_modules, spinor_weights
from dirac_pairings.weights import (
    Cover,
    RootDatum,
    VirtualCharacter,
    Weight,
    is_k_dominant,
    pair,
    restrict_to_k,
    rho_vectors,
    tensor,
    weyl_group,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiracIndex:
    """I_Dir(X) = H+ - H-, a virtual character of the spin cover."""

    index: VirtualCharacter

    @classmethod
    def zero(cls) -> DiracIndex:
        return cls(VirtualCharacter.zero(Cover.SPIN))

    def __str__(self) -> str:
        return str(self.index)


@dataclass(frozen=True)
class KTypeProvider:
    """Multiplicity oracle for the K-types of an admissible module.

    ``norm_bound`` bounds |sigma|^2 over every K-type sigma of the module; queries
    beyond it are never issued. ``None`` means no bound was declared.
    """

    multiplicity: Callable[[Weight], int]
    norm_bound: Fraction | int | None
    label: str = "provider"


def dirac_index_limits(datum: RootDatum, p: HCParameter) -> DiracIndex:
    """sgn(w) F_{chi - rho_c}, w the Weyl element taking the reference chamber to b."""
    p = normalize_parameter(datum, p)
    mu = (p.chi - datum.rho_c).on(Cover.SPIN)
    if not is_k_dominant(datum, mu):
        raise InvalidParameter(f"chi - rho_c = {mu} is not dominant integral for K")
    sign = datum.chamber_elements[p.chamber].sign
    return DiracIndex(VirtualCharacter.irreducible(mu, sign))


def dirac_index_combination(datum: RootDatum, combination: LimitCombination) -> DiracIndex:
    """(1/|W_chi|) sum eps(b) I(A_b); every summand agrees, so the result is integral."""
    total: dict[Weight, Fraction] = {}
    for member, sign in combination.members:
        for hw, coeff in dirac_index_limits(datum, member).index:
            total[hw] = total.get(hw, Fraction(0)) + combination.weight * sign * coeff
    if any(c.denominator != 1 for c in total.values()):
        raise IdentityFailed("Limit combination index is not integral", str(total))
    result = DiracIndex(VirtualCharacter.from_terms({w: int(c) for w, c in total.items()}, Cover.SPIN))
    base = HCParameter(combination.chi, combination.base_chamber, ParameterKind.LIMIT)
    expected = dirac_index_limits(datum, base)
    if result != expected:
        raise IdentityFailed("Limit combination index differs from its base limit", f"{result} vs {expected}")
    return result


def dirac_index_finite_dim(
    datum: RootDatum,
    g_highest_weight: Weight,
    chamber: int = 0,
    spinors: SpinorPair | None = None,
) -> DiracIndex:
    """X (x) S+ - X (x) S- for the finite-dimensional module of the given highest weight."""
    spinors = spinors or spinor_modules(datum)
    restriction = restrict_to_k(datum, g_highest_weight.on(Cover.K), chamber)
    index = tensor(datum, restriction, spinors.s_plus) - tensor(datum, restriction, spinors.s_minus)
    return DiracIndex(index)


def dirac_candidates(
    datum: RootDatum, infinitesimal: Weight, norm_filter: bool = False
) -> list[Weight]:
    """K-dominant tau with tau + rho_c in the W-orbit of the infinitesimal character.

    With ``norm_filter`` the orbit condition is relaxed to |tau + rho_c| = |Lambda|,
    which returns a superset.
    """
    rho_c = datum.rho_c
    if not norm_filter:
        found = set()
        for element in weyl_group(datum):
            tau = (element.apply(infinitesimal) - rho_c).on(Cover.SPIN)
            if is_k_dominant(datum, tau):
                found.add(tau)
        return sorted(found)

    target = datum.norm2(infinitesimal)
    inverse = Matrix(datum.gram).inv()
    bounds = []
    for i in range(datum.rank):
        entry = inverse[i, i]
        extent = math.ceil(4 * target * Fraction(int(entry.p), int(entry.q)))
        bounds.append(math.isqrt(extent) + 1)
    found = set()
    for coords in product(*(range(-b, b + 1) for b in bounds)):
        x = Weight(tuple(coords), Cover.SPIN)
        if datum.norm2(x) != target:
            continue
        tau = (x - rho_c).on(Cover.SPIN)
        if is_k_dominant(datum, tau):
            found.add(tau)
    return sorted(found)


def dirac_index_admissible(
    datum: RootDatum,
    provider: KTypeProvider,
    infinitesimal: Weight,
    spinors: SpinorPair | None = None,
) -> DiracIndex:
    """sum over K-types sigma of m(sigma) ([tau : sigma (x) S+] - [tau : sigma (x) S-]).

    Only tau from the candidate set can carry index, and a K-type sigma contributes
    to tau only when tau - sigma is a spinor weight, so the query set is finite.
    """
    if provider.norm_bound is None:
        raise UnboundedProvider(f"{provider.label} does not declare a norm bound")
    spinors = spinors or spinor_modules(datum)
    even, odd = spinor_weights(datum, spinors.reference_chamber)
    shifts = sorted(set(even.support()) | set(odd.support()))
    bound = Fraction(provider.norm_bound)

    result: dict[Weight, int] = {}
    for tau in dirac_candidates(datum, infinitesimal):
        target = VirtualCharacter.irreducible(tau)
        coefficient = 0
        for shift in shifts:
            sigma = (tau - shift).on(Cover.K)
            if not is_k_dominant(datum, sigma) or datum.norm2(sigma) > bound:
                continue
            mult = provider.multiplicity(sigma)
            if not mult:
                continue
            sigma_char = VirtualCharacter.irreducible(sigma)
            coefficient += mult * (
                pair(tensor(datum, sigma_char, spinors.s_plus), target)
                - pair(tensor(datum, sigma_char, spinors.s_minus), target)
            )
        if coefficient:
            result[tau] = coefficient
    return DiracIndex(VirtualCharacter.from_terms(result, Cover.SPIN))


def finite_dimensional_provider(
    datum: RootDatum, g_highest_weight: Weight, chamber: int = 0
) -> KTypeProvider:
    restriction = restrict_to_k(datum, g_highest_weight.on(Cover.K), chamber)
    multiplicities = restriction.as_dict()
    bound = max((datum.norm2(w) for w in multiplicities), default=Fraction(0))
    return KTypeProvider(
        multiplicity=lambda sigma: multiplicities.get(sigma.on(Cover.K), 0),
        norm_bound=bound,
        label=f"F{g_highest_weight}",
    )


def holomorphic_ladder_provider(
    datum: RootDatum, chi: Weight, chamber: int = 0, norm_bound: int = 64
) -> KTypeProvider:
    """K-types chi + rho_n - rho_c + k*beta, k >= 0, of a rank-one discrete series.

    Needs a chamber with a single positive noncompact root beta (sl(2,R)).
    """
    positives = datum.positive_noncompact(chamber)
    if len(positives) != 1 or datum.compact_roots:
        raise InvalidParameter("Ladder providers need abelian K and one positive noncompact root")
    (beta,) = positives
    _, rho_c, rho_n = rho_vectors(datum, chamber)
    lowest = (chi + rho_n - rho_c).on(Cover.K)

    def multiplicity(sigma: Weight) -> int:
        if datum.norm2(sigma) > norm_bound:
            return 0
        step = sigma.on(Cover.K) - lowest
        ratios = {Fraction(s, b) for s, b in zip(step.coords, beta.coords, strict=True) if b}
        if any(s for s, b in zip(step.coords, beta.coords, strict=True) if not b):
            return 0
        if len(ratios) != 1:
            return 0
        k = ratios.pop()
        return 1 if k.denominator == 1 and k >= 0 else 0

    return KTypeProvider(multiplicity, norm_bound, label=f"ladder{chi}@b{chamber}")


def empty_provider() -> KTypeProvider:
    return KTypeProvider(lambda _: 0, 0, label="zero")

