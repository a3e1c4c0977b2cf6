"""Partial entropic sums of Tsallis type: classical and quantum partial sums,
Ky Fan norms and distances, Uhlmann partial fidelities, continuity (Fannes-type)
bound checks, Lesche-style stability, and randomized verification harnesses."""

from .bounds import (
    DEFAULT_CHECK_TOL,
    AdversarialResult,
    BoundValue,
    BoundViolationError,
    InequalityCheck,
    adversarial_search,
    check_classical,
    check_fidelity_variant,
    check_quantum,
    check_tolerance,
    entropy_sum_diff,
    fannes_bound,
    stability_delta,
    stability_threshold,
)
from .classical import (
    SIMPLEX_TOL,
    JointDistribution,
    ProbVector,
    instability_example,
    kolmogorov_distance,
    marginal,
    max_partial_bounds,
    partial_distance,
    partial_sum,
    sum_largest_abs,
)
from .cli import ReportRow, RunConfig, cli_main, run_sweep
from .entropy import (
    SHANNON_LIMIT_WINDOW,
    Alpha,
    as_alpha,
    binary_entropy,
    entropy_gap_bound,
    entropy_term,
    entropy_term_argmax,
    q_log,
)
from .quantum import (
    COMMUTATOR_TOL,
    HERMITIAN_TOL,
    POVM_TOL,
    PSD_TOL,
    SPECTRUM_GAP_TOL,
    DensityOperator,
    PureEnsemble,
    RankOnePOVM,
    density_from_ensemble,
    eigenvalues_descending,
    ky_fan_distance,
    ky_fan_norm,
    partial_fidelity,
    partial_trace,
    povm_joint_probs,
    product_monotonicity_preconditions,
    psd_sqrt,
    quantum_partial_sum,
    schmidt_pure_state,
    singular_values_descending,
    tensor_product,
)
from .sampling import (
    basis_povm,
    maximize_partial_sum,
    sample_density,
    sample_ensemble,
    sample_near,
    sample_povm,
    sample_simplex,
    sample_state_vector,
)

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "AdversarialResult",
    "BoundValue",
    "BoundViolationError",
    "DensityOperator",
    "InequalityCheck",
    "JointDistribution",
    "ProbVector",
    "PureEnsemble",
    "RankOnePOVM",
    "ReportRow",
    "RunConfig",
    "DEFAULT_CHECK_TOL",
    "SHANNON_LIMIT_WINDOW",
    "SIMPLEX_TOL",
    "HERMITIAN_TOL",
    "PSD_TOL",
    "COMMUTATOR_TOL",
    "SPECTRUM_GAP_TOL",
    "POVM_TOL",
    "adversarial_search",
    "as_alpha",
    "basis_povm",
    "binary_entropy",
    "check_classical",
    "check_fidelity_variant",
    "check_quantum",
    "check_tolerance",
    "cli_main",
    "density_from_ensemble",
    "eigenvalues_descending",
    "entropy_gap_bound",
    "entropy_sum_diff",
    "entropy_term",
    "entropy_term_argmax",
    "fannes_bound",
    "instability_example",
    "kolmogorov_distance",
    "ky_fan_distance",
    "ky_fan_norm",
    "marginal",
    "max_partial_bounds",
    "maximize_partial_sum",
    "partial_distance",
    "partial_fidelity",
    "partial_sum",
    "partial_trace",
    "povm_joint_probs",
    "product_monotonicity_preconditions",
    "psd_sqrt",
    "q_log",
    "quantum_partial_sum",
    "run_sweep",
    "sample_density",
    "sample_ensemble",
    "sample_near",
    "sample_povm",
    "sample_simplex",
    "sample_state_vector",
    "schmidt_pure_state",
    "singular_values_descending",
    "stability_delta",
    "stability_threshold",
    "sum_largest_abs",
    "tensor_product",
]
