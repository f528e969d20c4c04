"""Classical Jacobi polynomials: evaluation, norms, kernels, Gauss quadrature.

Polynomials are kept in the classical normalization P_n(1) = C(n+alpha, n).
Kernels are accumulated from orthonormal values (the Christoffel-Darboux
quotient is numerically delicate near coinciding arguments and is not used
here).  The closed forms for K_n(t, 1) and K_n(1, 1) carry their Gamma-ratio
prefactors in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from .errors import NumericError, ParameterError
from .specfun import LogValue

__all__ = [
    "JacobiParams",
    "QuadratureRule",
    "jacobi_eval",
    "jacobi_eval_orthonormal",
    "jacobi_norm",
    "log_jacobi_norm",
    "jacobi_kernel",
    "jacobi_kernel_at_one",
    "jacobi_kernel_one_one",
    "jacobi_kernel_one_one_log",
    "gauss_jacobi_rule",
]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair of the weight (1-t)^alpha (1+t)^beta on [-1, 1]."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ParameterError(
                f"Jacobi weight needs alpha, beta > -1, got ({self.alpha}, {self.beta})"
            )


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights of a quadrature rule on (-1, 1)."""

    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f: Callable) -> float:
        """Integrate a callable that accepts an ndarray of nodes."""
        return float(np.dot(self.weights, f(self.nodes)))


# -- three-term recurrence coefficients (monic convention) -------------------
#
# p_{j+1} = (t - b_j) p_j - c_j p_{j-1};  the orthonormal recurrence uses
# sqrt(c_j) off-diagonals.  beta may be an ndarray; j is a Python int.

def _recur_diag(alpha, beta, j: int):
    if j == 0:
        return (beta - alpha) / (alpha + beta + 2.0)
    s = 2.0 * j + alpha + beta
    return (beta * beta - alpha * alpha) / (s * (s + 2.0))


def _recur_offdiag_sq(alpha, beta, j: int):
    if j < 1:
        raise ValueError("offdiagonal coefficient defined for j >= 1")
    if j == 1:
        # limit value of the generic formula; the generic form is 0/0 at
        # alpha + beta = -1
        apb = alpha + beta
        return 4.0 * (alpha + 1.0) * (beta + 1.0) / ((apb + 2.0) ** 2 * (apb + 3.0))
    s = 2.0 * j + alpha + beta
    return (4.0 * j * (j + alpha) * (j + beta) * (j + alpha + beta)
            / (s * s * (s * s - 1.0)))


def _log_weight_mass(alpha, beta):
    """log of the total mass of (1-t)^alpha (1+t)^beta; equals log h_0."""
    return ((alpha + beta + 1.0) * LN2 + gammaln(alpha + 1.0) + gammaln(beta + 1.0)
            - gammaln(alpha + beta + 2.0))


def jacobi_eval(p: JacobiParams, n: int, t):
    """P_n^{(alpha,beta)}(t) in the classical normalization.

    Accepts a scalar or ndarray argument.  Uses the standard three-term
    recurrence; the step from degree 0 to 1 is the explicit linear formula,
    which also covers the degenerate case alpha + beta = -1.
    """
    _check_degree(n)
    a, b = p.alpha, p.beta
    t_arr = np.asarray(t, dtype=float)
    prev = np.ones_like(t_arr)
    if n == 0:
        return _match_input(prev, t)
    cur = 0.5 * ((a + b + 2.0) * t_arr + (a - b))
    for m in range(2, n + 1):
        s = 2.0 * m + a + b
        c1 = 2.0 * m * (m + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s
        prev, cur = cur, ((c2 + c3 * t_arr) * cur - c4 * prev) / c1
    return _match_input(cur, t)


def log_jacobi_norm(p: JacobiParams, n: int) -> float:
    """log of h_n, the squared L^2 norm of P_n^{(alpha,beta)}."""
    _check_degree(n)
    a, b = p.alpha, p.beta
    if n == 0:
        return float(_log_weight_mass(a, b))
    return ((a + b + 1.0) * LN2
            + math.lgamma(n + a + 1.0) + math.lgamma(n + b + 1.0)
            - math.lgamma(n + 1.0) - math.lgamma(n + a + b + 1.0)
            - math.log(2.0 * n + a + b + 1.0))


def jacobi_norm(p: JacobiParams, n: int) -> float:
    return math.exp(log_jacobi_norm(p, n))


def jacobi_eval_orthonormal(p: JacobiParams, n: int, t):
    """Orthonormal Jacobi value p_n(t) = P_n(t) / sqrt(h_n)."""
    scale = math.exp(-0.5 * log_jacobi_norm(p, n))
    return jacobi_eval(p, n, t) * scale


def _orthonormal_values(alpha: float, beta: float, n: int, t: float) -> np.ndarray:
    """Values p_0(t), ..., p_n(t) of the orthonormal sequence at a scalar t."""
    vals = np.empty(n + 1)
    vals[0] = math.exp(-0.5 * float(_log_weight_mass(alpha, beta)))
    if n == 0:
        return vals
    sqc_next = math.sqrt(_recur_offdiag_sq(alpha, beta, 1))
    vals[1] = (t - _recur_diag(alpha, beta, 0)) * vals[0] / sqc_next
    for j in range(2, n + 1):
        sqc_prev, sqc_next = sqc_next, math.sqrt(_recur_offdiag_sq(alpha, beta, j))
        vals[j] = ((t - _recur_diag(alpha, beta, j - 1)) * vals[j - 1]
                   - sqc_prev * vals[j - 2]) / sqc_next
    return vals


def jacobi_kernel(p: JacobiParams, n: int, t: float, u: float) -> float:
    """K_n(t, u) = sum_{k<=n} P_k(t) P_k(u) / h_k, via orthonormal values."""
    _check_degree(n)
    seq_t = _orthonormal_values(p.alpha, p.beta, n, float(t))
    seq_u = seq_t if u == t else _orthonormal_values(p.alpha, p.beta, n, float(u))
    return float(np.dot(seq_t, seq_u))


def _log_kernel_pref(alpha, beta, n):
    """log of the prefactor in K_n(t,1) = pref * P_n^{(alpha+1,beta)}(t)."""
    return (-(alpha + beta + 1.0) * LN2 - gammaln(alpha + 1.0)
            + gammaln(n + alpha + beta + 2.0) - gammaln(n + beta + 1.0))


def jacobi_kernel_at_one(p: JacobiParams, n: int, t):
    """Closed form of K_n(t, 1); scalar or ndarray argument."""
    _check_degree(n)
    pref = math.exp(float(_log_kernel_pref(p.alpha, p.beta, n)))
    return pref * jacobi_eval(JacobiParams(p.alpha + 1.0, p.beta), n, t)


def _log_k11(alpha, beta, n):
    """log K_n(1, 1); alpha scalar, beta and n may be ndarrays."""
    return (_log_kernel_pref(alpha, beta, n)
            + gammaln(n + alpha + 2.0) - gammaln(n + 1.0) - gammaln(alpha + 2.0))


def jacobi_kernel_one_one(p: JacobiParams, n: int) -> float:
    """Closed form of K_n(1, 1)."""
    _check_degree(n)
    return math.exp(float(_log_k11(p.alpha, p.beta, n)))


def jacobi_kernel_one_one_log(p: JacobiParams, n: int) -> LogValue:
    """K_n(1, 1) as a LogValue; the value is always positive."""
    _check_degree(n)
    return LogValue(1, float(_log_k11(p.alpha, p.beta, n)))


def gauss_jacobi_rule(p: JacobiParams, n: int) -> QuadratureRule:
    """n-node Gauss-Jacobi rule for the weight (1-t)^alpha (1+t)^beta.

    Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
    recurrence matrix, weights come from the first eigenvector components.
    The rule integrates polynomials of degree <= 2n-1 exactly.
    """
    if n < 1:
        raise ParameterError(f"gauss_jacobi_rule requires n >= 1, got {n}")
    a, b = p.alpha, p.beta
    mass = math.exp(float(_log_weight_mass(a, b)))
    diag = np.array([_recur_diag(a, b, j) for j in range(n)])
    off = np.sqrt([_recur_offdiag_sq(a, b, j) for j in range(1, n)])
    try:
        nodes, vecs = eigh_tridiagonal(diag, off)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"Gauss-Jacobi eigensolver failed for n={n}: {exc}") from exc
    weights = mass * vecs[0, :] ** 2
    return QuadratureRule(nodes=nodes, weights=weights)


def _check_degree(n: int) -> None:
    if n < 0:
        raise ParameterError(f"polynomial degree must be >= 0, got {n}")


def _match_input(result: np.ndarray, original):
    if np.ndim(original) == 0:
        return float(result)
    return result
