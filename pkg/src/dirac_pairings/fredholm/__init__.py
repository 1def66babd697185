"""Algebraic Fredholm pairs over the rationals: index, reduction, additivity, perturbation."""

from .complexes import GradedComplexData, cohomology_dims, complex_to_pair, euler_via_pair
from .generators import (
    extension_diagram,
    perturbation_pair,
    random_complex,
    random_matrix,
    random_pair,
    random_st_zero_pair,
)
from .linalg import (
    complement,
    exact_matrix,
    image,
    intersection_dim,
    kernel,
    matrix_to_json,
    quotient_map,
    rank,
)
from .pairs import FredholmIndex, FredholmPairData, ReducedPair, fredholm_index, rank_index, reduced_pair
from .perturbation import PerturbationReport, SuperOperator, is_semisimple, perturbed_index
from .sequences import AdditivityReport, ExtensionDiagram, check_additivity
from .suites import DEFAULT_INSTANCES, SUITES, SuiteResult, run_suite, run_suites

__all__ = [
    "DEFAULT_INSTANCES",
    "SUITES",
    "AdditivityReport",
    "ExtensionDiagram",
    "FredholmIndex",
    "FredholmPairData",
    "GradedComplexData",
    "PerturbationReport",
    "ReducedPair",
    "SuiteResult",
    "SuperOperator",
    "check_additivity",
    "cohomology_dims",
    "complement",
    "complex_to_pair",
    "euler_via_pair",
    "exact_matrix",
    "extension_diagram",
    "fredholm_index",
    "image",
    "intersection_dim",
    "is_semisimple",
    "kernel",
    "matrix_to_json",
    "perturbation_pair",
    "perturbed_index",
    "quotient_map",
    "random_complex",
    "random_matrix",
    "random_pair",
    "random_st_zero_pair",
    "rank",
    "rank_index",
    "reduced_pair",
    "run_suite",
    "run_suites",
]
