"""Numerical toolkit for steering functionals and their violations.

Builds functionals from mutually unbiased bases, anticommuting observable
chains and random sign tables; computes exact local-hidden-state bounds
by deterministic-strategy enumeration, quantum bounds analytically and by
a monotone see-saw; and verifies every analytic norm bound the
constructions satisfy.
"""

from ._version import __version__
from .bounds import (
    BoundsReport,
    Certificate,
    GramIdentityReport,
    GramMatrix,
    LhsExactResult,
    QuantumBoundResult,
    SeesawResult,
    applicable_lhs_analytic,
    applicable_violation_lower_bounds,
    fine_grained_bound,
    fine_grained_xi,
    gram_matrix,
    gram_norm_identity_check,
    lhs_bound_clifford_analytic,
    lhs_bound_exact,
    lhs_bound_exact_general,
    lhs_bound_mub_analytic,
    quantum_bound,
    quantum_bound_seesaw,
    strategy_norms,
    violation,
)
from .clifford import (
    AnticommutationReport,
    CliffordFamily,
    build_clifford_family,
    verify_anticommutation,
)
from .errors import (
    BoundCheckError,
    EnumerationCapExceeded,
    PreconditionError,
    SchemaError,
    SteerboundError,
)
from .functionals import (
    Assemblage,
    AssemblageReport,
    DichotomicFunctional,
    SteeringFunctional,
    canonical_quantum_assemblage,
    clifford_functional,
    clifford_projectors,
    dichotomic_functional,
    evaluate,
    mub_functional,
    random_functional,
)
from .linalg import (
    hermitian_eigensystem,
    hermitian_eigenvalues,
    numerical_radius,
    operator_norm,
    tensor,
)
from .mub import MubFamily, UnbiasednessReport, build_mub_family, verify_unbiasedness
from .tolerances import TOLERANCES, Tolerances

__all__ = [
    "__version__",
    "TOLERANCES",
    "Tolerances",
    "SteerboundError",
    "PreconditionError",
    "EnumerationCapExceeded",
    "SchemaError",
    "BoundCheckError",
    "hermitian_eigenvalues",
    "hermitian_eigensystem",
    "operator_norm",
    "numerical_radius",
    "tensor",
    "MubFamily",
    "UnbiasednessReport",
    "build_mub_family",
    "verify_unbiasedness",
    "CliffordFamily",
    "AnticommutationReport",
    "build_clifford_family",
    "verify_anticommutation",
    "SteeringFunctional",
    "Assemblage",
    "AssemblageReport",
    "DichotomicFunctional",
    "mub_functional",
    "clifford_functional",
    "clifford_projectors",
    "dichotomic_functional",
    "random_functional",
    "evaluate",
    "canonical_quantum_assemblage",
    "BoundsReport",
    "Certificate",
    "GramMatrix",
    "GramIdentityReport",
    "LhsExactResult",
    "QuantumBoundResult",
    "SeesawResult",
    "lhs_bound_exact",
    "lhs_bound_exact_general",
    "lhs_bound_mub_analytic",
    "lhs_bound_clifford_analytic",
    "strategy_norms",
    "quantum_bound",
    "quantum_bound_seesaw",
    "violation",
    "applicable_lhs_analytic",
    "applicable_violation_lower_bounds",
    "gram_matrix",
    "gram_norm_identity_check",
    "fine_grained_xi",
    "fine_grained_bound",
]
