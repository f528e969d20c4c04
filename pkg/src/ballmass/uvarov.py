"""Uvarov modification of Jacobi polynomials: mass M at t = 1.

The modified polynomials q_k are a rank-one correction of the classical
P_k, with coefficient M P_k(1) / (1 + M K_{k-1}(1,1)) (K_{-1} is zero).
The mass can be astronomically large (the ball module passes M = lambda
2^k / c for k up to 1e5), so M never appears as a bare factor: every
occurrence is through M K / (1 + M K) or 1 / (1 + M K), evaluated from
log(M K) with a sigmoid / softplus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .errors import ParameterError
from .jacobi import (
    JacobiParams,
    _log_k11,
    jacobi_eval,
    jacobi_kernel,
    jacobi_kernel_at_one,
    jacobi_kernel_one_one,
    log_jacobi_norm,
)
from .specfun import log_binomial

__all__ = [
    "UvarovParams",
    "uvarov_eval",
    "uvarov_value_at_one",
    "uvarov_norm",
    "log_uvarov_norm",
    "uvarov_kernel",
    "uvarov_kernel_one_one",
]


@dataclass(frozen=True)
class UvarovParams:
    """Jacobi weight plus a point mass M >= 0 at t = 1.

    ``log_mass`` is the working representation; ``mass`` may round to inf
    for masses beyond double range when constructed via ``from_log_mass``.
    """

    base: JacobiParams
    mass: float
    log_mass: float | None = None  # derived unless supplied by from_log_mass

    def __post_init__(self):
        if self.log_mass is None:
            if not self.mass >= 0.0:
                raise ParameterError(f"point mass must be >= 0, got {self.mass}")
            object.__setattr__(
                self, "log_mass",
                math.log(self.mass) if self.mass > 0.0 else -math.inf)

    @classmethod
    def from_log_mass(cls, base: JacobiParams, log_mass: float) -> "UvarovParams":
        try:
            mass = math.exp(log_mass)
        except OverflowError:
            mass = math.inf
        return cls(base, mass, log_mass)


def _log_mass_times_k11(u: UvarovParams, k: int) -> float:
    """log(M * K_k(1,1)); -inf for k = -1 (the K_{-1} = 0 convention) or M = 0."""
    if k < 0 or u.log_mass == -math.inf:
        return -math.inf
    return u.log_mass + float(_log_k11(u.base.alpha, u.base.beta, k))


def uvarov_eval(u: UvarovParams, k: int, t):
    """q_k(t) = P_k(t) - [M P_k(1) / (1 + M K_{k-1}(1,1))] K_{k-1}(1, t).

    Same leading coefficient as P_k; scalar or ndarray argument.  M = 0
    reduces to the classical polynomial exactly.
    """
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    if k == 0:
        return jacobi_eval(u.base, 0, t)
    rho = float(expit(_log_mass_times_k11(u, k - 1)))
    if rho == 0.0:
        return jacobi_eval(u.base, k, t)
    # M P_k(1) / (1 + M K) = rho * P_k(1) / K, all factors polynomially sized
    coef = rho * math.exp(log_binomial(k + u.base.alpha, k)
                          - float(_log_k11(u.base.alpha, u.base.beta, k - 1)))
    return jacobi_eval(u.base, k, t) - coef * jacobi_kernel_at_one(u.base, k - 1, t)


def uvarov_value_at_one(u: UvarovParams, k: int) -> float:
    """q_k(1) = P_k(1) / (1 + M K_{k-1}(1,1))."""
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    if k == 0:
        return 1.0
    logmk = _log_mass_times_k11(u, k - 1)
    return math.exp(log_binomial(k + u.base.alpha, k) - np.logaddexp(0.0, logmk))


def log_uvarov_norm(u: UvarovParams, k: int) -> float:
    """log of (q_k, q_k) under the mass-modified inner product.

    Equals h_k (1 + M K_k(1,1)) / (1 + M K_{k-1}(1,1)); at k = 0 this is
    h_0 + M, the value of the defining inner product.
    """
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    return (log_jacobi_norm(u.base, k)
            + float(np.logaddexp(0.0, _log_mass_times_k11(u, k)))
            - float(np.logaddexp(0.0, _log_mass_times_k11(u, k - 1))))


def uvarov_norm(u: UvarovParams, k: int) -> float:
    return math.exp(log_uvarov_norm(u, k))


def uvarov_kernel(u: UvarovParams, k: int, t: float, s: float) -> float:
    """Modified kernel: K_k(t,s) - M K_k(1,t) K_k(1,s) / (1 + M K_k(1,1))."""
    base_val = jacobi_kernel(u.base, k, t, s)
    rho = float(expit(_log_mass_times_k11(u, k)))
    if rho == 0.0:
        return base_val
    k1t = jacobi_kernel_at_one(u.base, k, t)
    k1s = jacobi_kernel_at_one(u.base, k, s)
    k11 = jacobi_kernel_one_one(u.base, k)
    return base_val - rho * (k1t / k11) * k1s


def uvarov_kernel_one_one(u: UvarovParams, k: int) -> float:
    """K~_k(1,1) = K_k(1,1) / (1 + M K_k(1,1)); bounded by 1/M for M > 0."""
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    logk11 = float(_log_k11(u.base.alpha, u.base.beta, k))
    logmk = _log_mass_times_k11(u, k)
    return math.exp(logk11 - float(np.logaddexp(0.0, logmk)))
