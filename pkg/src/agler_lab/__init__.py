"""agler-lab: finite Nevanlinna-Pick-Agler interpolation diagnostics.

Numerical feasibility checks, certificates and dual witnesses for bounded
interpolation with respect to test-function families on the unit disc, the
polydisc, and the symmetrized bidisc, plus the surrounding diagnostics:
normalized Grammian spectra over the admissible kernel cone, Carleson-type
pseudohyperbolic products, weak/strong separation constants, and unitary
colligation realizations.
"""

from .agler import (
    AglerCertificate,
    DualWitness,
    FeasibilityResult,
    InterpolationProblem,
    SolverConfig,
    SolverIndeterminate,
    agler_feasibility,
    kernel_necessary_check,
    minimal_norm,
    pick_matrix,
    verify_certificate,
    verify_witness,
)
from .colligation import (
    Colligation,
    diag_direct_sum,
    is_unitary,
    membership_test,
    pointwise_product,
    random_unitary_colligation,
    transfer_eval,
    transpose,
)
from .errors import (
    AdmissibilityFailure,
    AglerLabError,
    ConfigError,
    DimensionMismatch,
    DomainMismatch,
    DuplicatePoints,
    NonHermitianInput,
    NotInDisc,
    SpecError,
)
from .grammian import (
    ConeBounds,
    GrammianDiagnostics,
    bounds_over_cone,
    exact_route_available,
    normalized_grammian,
    schur_reduction_check,
    truncation_trend,
)
from .kernels import (
    AdmissibilityReport,
    KernelSample,
    PointConfig,
    base_kernel,
    cone_samples,
    disc_config,
    mask_matrix,
    polydisc_config,
    product_szego_gram,
    scale_by_random_psd,
    symmetrized_szego_gram,
    szego_gram,
    verify_admissible,
)
from .separation import (
    SeparationReport,
    carleson_products,
    pseudohyperbolic,
    strong_separation_certificate,
    weak_separation_constant,
)
from .sequences import SequenceSpec, generate, prefixes
from .test_functions import (
    DISC,
    G2,
    Coordinate,
    MagicFunction,
    Point,
    TestFunctionFamily,
    disc_family,
    disc_point,
    g2_family,
    membership_check,
    polydisc,
    polydisc_family,
    polydisc_point,
    split_g2,
    symmetrize,
)
from .theorem import TheoremReport, TheoremRow, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityFailure",
    "AdmissibilityReport",
    "AglerCertificate",
    "AglerLabError",
    "Colligation",
    "ConeBounds",
    "ConfigError",
    "Coordinate",
    "DISC",
    "DimensionMismatch",
    "DomainMismatch",
    "DualWitness",
    "DuplicatePoints",
    "FeasibilityResult",
    "G2",
    "GrammianDiagnostics",
    "InterpolationProblem",
    "KernelSample",
    "MagicFunction",
    "NonHermitianInput",
    "NotInDisc",
    "Point",
    "PointConfig",
    "SeparationReport",
    "SequenceSpec",
    "SolverConfig",
    "SolverIndeterminate",
    "SpecError",
    "TestFunctionFamily",
    "TheoremReport",
    "TheoremRow",
    "agler_feasibility",
    "base_kernel",
    "bounds_over_cone",
    "carleson_products",
    "cone_samples",
    "diag_direct_sum",
    "disc_config",
    "disc_family",
    "disc_point",
    "exact_route_available",
    "g2_family",
    "generate",
    "is_unitary",
    "kernel_necessary_check",
    "mask_matrix",
    "membership_check",
    "membership_test",
    "minimal_norm",
    "normalized_grammian",
    "pick_matrix",
    "pointwise_product",
    "polydisc",
    "polydisc_config",
    "polydisc_family",
    "polydisc_point",
    "prefixes",
    "product_szego_gram",
    "pseudohyperbolic",
    "random_unitary_colligation",
    "scale_by_random_psd",
    "schur_reduction_check",
    "split_g2",
    "strong_separation_certificate",
    "symmetrize",
    "symmetrized_szego_gram",
    "szego_gram",
    "transfer_eval",
    "transpose",
    "truncation_trend",
    "verify_admissible",
    "verify_certificate",
    "verify_theorem",
    "verify_witness",
    "weak_separation_constant",
]
