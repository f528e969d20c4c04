"""Orthogonal polynomials, kernels and Christoffel functions on the unit ball
with a uniform point mass on the boundary sphere."""

from .asymptotics import (
    ConvergenceRecord,
    SweepConfig,
    boundary_ratio,
    difference_bound_check,
    geometric_schedule,
    interior_limit_target,
    interior_ratio,
    lemma_kernel_bound_profile,
    lemma_kernel_bound_ratio,
    run_sweep,
    sweep_error_envelope,
)
from .ball import (
    BallParams,
    BallPoint,
    BallQuadratureRule,
    RadialIndex,
    ball_kernel,
    ball_kernel_difference,
    ball_kernel_modified,
    ball_quadrature,
    christoffel,
    classical_basis_eval,
    classical_norm_H,
    mass_for_harmonic_degree,
    mass_for_harmonic_degree_log,
    modified_basis_eval,
    modified_norm_H,
)
from .errors import DomainError, NumericError, ParameterError, UnsupportedDimensionError
from .gegenbauer import (
    chebyshev_eval,
    gegenbauer_eval,
    spherical_factor,
    spherical_factor_sequence,
)
from .harmonics import (
    UnitDirection,
    addition_sum,
    harmonic_basis_eval,
    harmonic_basis_values,
    sphere_rule,
)
from .jacobi import (
    JacobiParams,
    QuadratureRule,
    gauss_jacobi_rule,
    jacobi_eval,
    jacobi_eval_orthonormal,
    jacobi_kernel,
    jacobi_kernel_at_one,
    jacobi_kernel_one_one,
    jacobi_kernel_one_one_log,
    jacobi_norm,
    log_jacobi_norm,
)
from .specfun import (
    LogValue,
    c_mu_d,
    harmonic_dim,
    log_binomial,
    log_gamma,
    omega_mu,
    sigma_sphere,
)
from .uvarov import (
    UvarovParams,
    log_uvarov_norm,
    uvarov_eval,
    uvarov_kernel,
    uvarov_kernel_one_one,
    uvarov_norm,
    uvarov_value_at_one,
)

__version__ = "0.1.0"
