"""Spinor modules, Harish-Chandra parameters, Dirac indices and pairings."""

from .index import (
    DiracIndex,
    KTypeProvider,
    dirac_candidates,
    dirac_index_admissible,
    dirac_index_combination,
    dirac_index_finite_dim,
    dirac_index_limits,
    empty_provider,
    finite_dimensional_provider,
    holomorphic_ladder_provider,
)
from .pairing import (
    dirac_pairing,
    dirac_pairing_summands,
    ep_pairing_degrees,
    ep_pairing_finite_dim,
    index_coefficients,
    wedge_p_degree,
)
from .parameters import (
    HCParameter,
    LimitCombination,
    ParameterKind,
    ds_family,
    limit_combination,
    normalize_parameter,
    parameters_for,
    validate_parameter,
)
from .spinors import SpinorPair, spinor_modules, spinor_weights, wedge_p_alternating

__all__ = [
    "DiracIndex",
    "HCParameter",
    "KTypeProvider",
    "LimitCombination",
    "ParameterKind",
    "SpinorPair",
    "dirac_candidates",
    "dirac_index_admissible",
    "dirac_index_combination",
    "dirac_index_finite_dim",
    "dirac_index_limits",
    "dirac_pairing",
    "dirac_pairing_summands",
    "ds_family",
    "empty_provider",
    "ep_pairing_degrees",
    "ep_pairing_finite_dim",
    "finite_dimensional_provider",
    "holomorphic_ladder_provider",
    "index_coefficients",
    "limit_combination",
    "normalize_parameter",
    "parameters_for",
    "spinor_modules",
    "spinor_weights",
    "validate_parameter",
    "wedge_p_alternating",
    "wedge_p_degree",
]
