"""Explicit matrix models: Dirac operators, (S, T), the Ext complex and its splitting."""

from .algebra import LabAlgebra, kron, lab_algebra, sl2_algebra
from .clifford import SpinorMatrices, build_spinor_matrices, check_clifford_relation
from .dirac import (
    DiracCohomology,
    dirac_cohomology,
    dirac_matrix,
    tensor_weights,
    verify_parthasarathy,
    verify_scalar_action,
)
from .ext import ExtComplex, ext_complex
from .homspaces import HomSpace, HomUnit, STPair, STReport, build_ST, hom_space, index_ST
from .modules import (
    MatrixHCModule,
    finite_dimensional_module,
    load_matrix_module,
    module_from_dict,
    modules_up_to,
    validate_module,
)
from .split import (
    ConjectureReport,
    SplitOperators,
    conjecture_check,
    eight_operators,
    highest_weight,
    perturbation_exports,
    perturbation_instance,
    split_operators,
)
from .suite import LAB_RUNS, LabResult, module_identities, run_conjecture, run_identities, run_lab

__all__ = [
    "LAB_RUNS",
    "ConjectureReport",
    "DiracCohomology",
    "ExtComplex",
    "HomSpace",
    "HomUnit",
    "LabAlgebra",
    "LabResult",
    "MatrixHCModule",
    "STPair",
    "STReport",
    "SplitOperators",
    "SpinorMatrices",
    "build_ST",
    "build_spinor_matrices",
    "check_clifford_relation",
    "conjecture_check",
    "dirac_cohomology",
    "dirac_matrix",
    "eight_operators",
    "ext_complex",
    "finite_dimensional_module",
    "highest_weight",
    "hom_space",
    "index_ST",
    "kron",
    "lab_algebra",
    "load_matrix_module",
    "module_from_dict",
    "module_identities",
    "modules_up_to",
    "perturbation_exports",
    "perturbation_instance",
    "run_conjecture",
    "run_identities",
    "run_lab",
    "sl2_algebra",
    "split_operators",
    "tensor_weights",
    "validate_module",
    "verify_parthasarathy",
    "verify_scalar_action",
]
