"""Multivariate objects on the unit ball: bases, norms, kernels, quadrature.

Kernels are computed by the Gegenbauer reduction: the degree-n kernel is a
sum over harmonic degrees k of a univariate Jacobi (or Uvarov-modified)
kernel of degree m(k) = floor((n-k)/2) at (2r^2-1, 2s^2-1), times (2rs)^k,
times the spherical addition-formula factor.

The (2rs)^k factor is absorbed symmetrically into each side of the
orthonormal radial products: R_{j,k}(r) = (sqrt(2) r)^k p_j^{(mu, k+delta)}
(2r^2-1).  The weight (1+t)^{k+delta} makes the bare orthonormal values
grow like (2r^2)^{-k/2}, which the absorbed factor cancels exactly, so R
stays polynomially bounded up to very large degrees.  The recurrence over j
runs vectorized over all k at once, giving O(n^2) work in numpy for a full
kernel evaluation.

The mass correction per k is rho_k * g_k(r) * g_k(s) with
rho_k = M_k K(1,1) / (1 + M_k K(1,1)) and
g_k(r) = (sqrt(2) r)^k K(t,1) / sqrt(K(1,1)); both factors are assembled in
log space.  At the exact boundary diagonal the
classical and correction parts cancel catastrophically, so that case is
routed through the closed forms for K(1,1) in log space instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import expit, gammaln, log_expit

from .errors import (
    DomainError,
    NumericError,
    ParameterError,
    UnsupportedDimensionError,
)
from .gegenbauer import spherical_factor_sequence
from .harmonics import UnitDirection, harmonic_basis_eval, sphere_rule
from .jacobi import (
    LN2,
    JacobiParams,
    _log_k11,
    _log_kernel_pref,
    _log_weight_mass,
    _recur_diag,
    _recur_offdiag_sq,
    gauss_jacobi_rule,
    jacobi_eval,
    log_jacobi_norm,
)
from .specfun import LogValue, c_mu_d, harmonic_dim, log_gamma
from .uvarov import UvarovParams, log_uvarov_norm, uvarov_eval

__all__ = [
    "BallParams",
    "BallPoint",
    "RadialIndex",
    "BallQuadratureRule",
    "mass_for_harmonic_degree",
    "mass_for_harmonic_degree_log",
    "classical_basis_eval",
    "modified_basis_eval",
    "classical_norm_H",
    "modified_norm_H",
    "ball_kernel",
    "ball_kernel_modified",
    "ball_kernel_difference",
    "christoffel",
    "ball_quadrature",
]

_SPHERE_SNAP = 1e-12


@dataclass(frozen=True)
class BallParams:
    """Dimension d, ball exponent mu, and sphere mass lambda (field ``lam``)."""

    d: int
    mu: float
    lam: float = 0.0

    def __post_init__(self):
        if self.d < 2:
            raise ParameterError(f"dimension must satisfy d >= 2, got {self.d}")
        if not self.mu > -1:
            raise ParameterError(f"ball exponent must satisfy mu > -1, got {self.mu}")
        if not self.lam >= 0:
            raise ParameterError(f"sphere mass must satisfy lambda >= 0, got {self.lam}")

    @property
    def delta(self) -> float:
        return (self.d - 2) / 2.0


@dataclass(frozen=True)
class BallPoint:
    """A point of the closed unit ball as (radius, unit direction).

    The direction may be omitted at r = 0, where no operation needs it.
    """

    r: float
    xi: UnitDirection | None = None

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise ParameterError(f"radius must lie in [0, 1], got {self.r}")
        if self.r > 0.0 and self.xi is None:
            raise ParameterError("a direction is required for r > 0")

    @property
    def t(self) -> float:
        """Radial variable 2 r^2 - 1 in [-1, 1]."""
        return 2.0 * self.r * self.r - 1.0

    @property
    def cartesian(self) -> np.ndarray:
        if self.xi is None:
            raise ParameterError("cartesian coordinates undefined without a direction")
        return self.r * np.asarray(self.xi.coords)

    @classmethod
    def from_cartesian(cls, coords) -> "BallPoint":
        """Build from cartesian coordinates, snapping near-unit radii to the sphere.

        Points with |x| > 1 + 1e-12 are rejected; |x| within 1e-12 of 1 is
        snapped to r = 1, because boundary formulas differ and silent
        misclassification would corrupt boundary asymptotics runs.
        """
        c = np.asarray(coords, dtype=float)
        norm = float(np.linalg.norm(c))
        if norm > 1.0 + _SPHERE_SNAP:
            raise DomainError(f"point lies outside the closed unit ball: |x| = {norm}")
        if norm == 0.0:
            return cls(0.0, None)
        r = 1.0 if norm > 1.0 - _SPHERE_SNAP else norm
        return cls(r, UnitDirection.from_coords(c / norm))


@dataclass(frozen=True)
class RadialIndex:
    """Index (n, j) of a basis element: total degree n, radial degree j."""

    n: int
    j: int

    def __post_init__(self):
        if self.n < 0 or self.j < 0 or 2 * self.j > self.n:
            raise ParameterError(
                f"radial index needs 0 <= 2j <= n, got n={self.n}, j={self.j}")

    @property
    def k(self) -> int:
        """Harmonic degree n - 2j."""
        return self.n - 2 * self.j


def mass_for_harmonic_degree(bp: BallParams, k: int) -> float:
    """Effective univariate mass M_k = lambda 2^k / c_mu^d (may overflow to inf)."""
    if k < 0:
        raise ParameterError(f"harmonic degree must be >= 0, got {k}")
    return mass_for_harmonic_degree_log(bp, k).to_float()


def mass_for_harmonic_degree_log(bp: BallParams, k: int) -> LogValue:
    """M_k as a LogValue, usable for k far beyond double range."""
    if k < 0:
        raise ParameterError(f"harmonic degree must be >= 0, got {k}")
    if bp.lam == 0.0:
        return LogValue(0, -math.inf)
    return LogValue(1, math.log(bp.lam) + k * LN2 - math.log(c_mu_d(bp.mu, bp.d)))


# -- basis elements -----------------------------------------------------------

def _require_d23(d: int) -> None:
    if d not in (2, 3):
        raise UnsupportedDimensionError(
            f"explicit bases implemented for d in {{2, 3}}, got d={d}")


def classical_basis_eval(bp: BallParams, idx: RadialIndex, nu: int, x: BallPoint) -> float:
    """P^n_{j,nu}(x) = P_j^{(mu, k+delta)}(2|x|^2-1) * r^k Y_nu^k(xi), k = n-2j."""
    _require_d23(bp.d)
    k = idx.k
    radial = jacobi_eval(JacobiParams(bp.mu, k + bp.delta), idx.j, x.t)
    return radial * _solid_harmonic(bp.d, k, nu, x)


def modified_basis_eval(bp: BallParams, idx: RadialIndex, nu: int, x: BallPoint) -> float:
    """Q^n_{j,nu}(x): Uvarov radial polynomial with mass M_{n-2j} times the solid harmonic."""
    _require_d23(bp.d)
    k = idx.k
    u = UvarovParams.from_log_mass(
        JacobiParams(bp.mu, k + bp.delta),
        mass_for_harmonic_degree_log(bp, k).log_magnitude)
    radial = uvarov_eval(u, idx.j, x.t)
    return radial * _solid_harmonic(bp.d, k, nu, x)


def _solid_harmonic(d: int, k: int, nu: int, x: BallPoint) -> float:
    if not 1 <= nu <= harmonic_dim(k, d):
        raise ParameterError(
            f"harmonic index nu={nu} out of range [1, {harmonic_dim(k, d)}]")
    if k == 0:
        return 1.0
    if x.r == 0.0:
        return 0.0
    return x.r ** k * harmonic_basis_eval(d, k, nu, x.xi)


# -- norms --------------------------------------------------------------------

def classical_norm_H(bp: BallParams, idx: RadialIndex) -> float:
    """Squared norm H of P^n_{j,nu} (nu-independent).

    Computed through the Gamma route (c/2^k) h_j^{(mu, k+delta)} and
    cross-checked against the Pochhammer form; a disagreement signals a
    transcription error and raises.
    """
    n, j, k = idx.n, idx.j, idx.k
    mu, d = bp.mu, bp.d
    gamma_path = math.exp(
        math.log(c_mu_d(mu, d)) - k * LN2
        + log_jacobi_norm(JacobiParams(mu, k + bp.delta), j))
    log_poch = (
        _log_pochhammer(mu + 1.0, j) + _log_pochhammer(d / 2.0, n - j)
        + math.log(n - j + mu + d / 2.0)
        - log_gamma(j + 1.0) - _log_pochhammer(mu + d / 2.0 + 1.0, n - j)
        - math.log(n + mu + d / 2.0))
    poch_path = math.exp(log_poch)
    if abs(poch_path - gamma_path) > 1e-12 * gamma_path:
        raise NumericError(
            f"norm cross-check failed for n={n}, j={j}: "
            f"{gamma_path} vs {poch_path}")
    return gamma_path


def modified_norm_H(bp: BallParams, idx: RadialIndex) -> float:
    """Squared norm H~ of Q^n_{j,nu}: (c/2^k) h~_j with mass M_k."""
    k = idx.k
    u = UvarovParams.from_log_mass(
        JacobiParams(bp.mu, k + bp.delta),
        mass_for_harmonic_degree_log(bp, k).log_magnitude)
    return math.exp(math.log(c_mu_d(bp.mu, bp.d)) - k * LN2 + log_uvarov_norm(u, idx.j))


def _log_pochhammer(x: float, j: int) -> float:
    return log_gamma(x + j) - log_gamma(x)


# -- scaled radial machinery --------------------------------------------------

def _radial_scale_log(kk: np.ndarray, r: float) -> np.ndarray:
    """k * log(sqrt(2) r) with the r = 0 and k = 0 corners well defined."""
    if r == 0.0:
        return np.where(kk == 0, 0.0, -np.inf)
    return kk * math.log(math.sqrt(2.0) * r)


# The scaled recurrences start from a seed exp(k log(sqrt(2) r) - log h_0 / 2)
# whose exponent can sit a thousand orders below double range while later
# values in the same trajectory are macroscopic.  The recurrence therefore
# runs on unit-seeded values with a per-k exponent offset, renormalized by
# exact powers of two whenever the working values leave a safe window.

_RENORM_LIMIT = 2.0 ** 500
_RENORM_TINY = 2.0 ** -500
_RENORM_SCALE = 2.0 ** -500
_RENORM_LOG = 500.0 * LN2


def _renorm_pair(exps: np.ndarray, cur: np.ndarray, prev: np.ndarray):
    """Pull the working pair back into [2^-500, 2^500], adjusting the exponents."""
    mag = np.maximum(np.abs(cur), np.abs(prev))
    big = mag > _RENORM_LIMIT
    if np.any(big):
        cur = np.where(big, cur * _RENORM_SCALE, cur)
        prev = np.where(big, prev * _RENORM_SCALE, prev)
        exps = np.where(big, exps + _RENORM_LOG, exps)
    small = (mag > 0.0) & (mag < _RENORM_TINY)
    if np.any(small):
        cur = np.where(small, cur / _RENORM_SCALE, cur)
        prev = np.where(small, prev / _RENORM_SCALE, prev)
        exps = np.where(small, exps - _RENORM_LOG, exps)
    return exps, cur, prev


def _scaled_pair_sums(alpha: float, delta: float, n: int,
                      r: float, t: float, s: float, u: float) -> np.ndarray:
    """out[k] = (2 r s)^k K_{m(k)}^{(alpha, k+delta)}(t, u), m(k) = (n-k)//2.

    Accumulates scaled orthonormal products R_{j,k}(r) R_{j,k}(s) with the
    j-recurrence run simultaneously over all k; the active k-range shrinks
    by two per j step.
    """
    kk = np.arange(n + 1)
    beta = kk + delta
    logh0 = _log_weight_mass(alpha, beta)
    same = (r == s) and (t == u)
    er = _radial_scale_log(kk, r) - 0.5 * logh0
    es = er if same else _radial_scale_log(kk, s) - 0.5 * logh0
    rr = np.ones(n + 1)
    ss = rr
    rr_prev = np.zeros(n + 1)
    ss_prev = rr_prev
    total = np.exp(er + es)
    sqc_prev = None
    for j in range(1, n // 2 + 1):
        width = n - 2 * j + 1
        er = er[:width]
        rr, rr_prev = rr[:width], rr_prev[:width]
        if not same:
            es = es[:width]
            ss, ss_prev = ss[:width], ss_prev[:width]
        b = _recur_diag(alpha, beta[:width], j - 1)
        sqc = np.sqrt(_recur_offdiag_sq(alpha, beta[:width], j))
        if j == 1:
            rr_new = (t - b) * rr / sqc
            ss_new = rr_new if same else (u - b) * ss / sqc
        else:
            prev_off = sqc_prev[:width]
            rr_new = ((t - b) * rr - prev_off * rr_prev) / sqc
            ss_new = rr_new if same else ((u - b) * ss - prev_off * ss_prev) / sqc
        total[:width] += rr_new * ss_new * np.exp(er + (er if same else es))
        er, rr_new, rr = _renorm_pair(er, rr_new, rr)
        rr_prev, rr = rr, rr_new
        if same:
            es, ss, ss_prev = er, rr, rr_prev
        else:
            es, ss_new, ss = _renorm_pair(es, ss_new, ss)
            ss_prev, ss = ss, ss_new
        sqc_prev = sqc
    return total


def _scaled_values_at_m(alpha: float, delta: float, n: int, r: float, t: float):
    """(values, exps) with values[k] e^{exps[k]} = (sqrt(2) r)^k p_{m(k)}^{(alpha, k+delta)}(t).

    The j-recurrence captures the orthonormal value for k = n-2j and
    k = n-2j-1 at each step, which are exactly the k with m(k) = j.
    """
    kk = np.arange(n + 1)
    beta = kk + delta
    logh0 = _log_weight_mass(alpha, beta)
    exps_full = _radial_scale_log(kk, r) - 0.5 * logh0
    out_val = np.empty(n + 1)
    out_exp = exps_full.copy()
    out_val[n] = 1.0
    if n >= 1:
        out_val[n - 1] = 1.0
    exps = exps_full
    cur = np.ones(n + 1)
    prev = np.zeros(n + 1)
    sqc_prev = None
    for j in range(1, n // 2 + 1):
        width = n - 2 * j + 1
        exps = exps[:width]
        cur, prev = cur[:width], prev[:width]
        b = _recur_diag(alpha, beta[:width], j - 1)
        sqc = np.sqrt(_recur_offdiag_sq(alpha, beta[:width], j))
        if j == 1:
            new = (t - b) * cur / sqc
        else:
            new = ((t - b) * cur - sqc_prev[:width] * prev) / sqc
        out_val[width - 1] = new[width - 1]
        out_exp[width - 1] = exps[width - 1]
        if width >= 2:
            out_val[width - 2] = new[width - 2]
            out_exp[width - 2] = exps[width - 2]
        exps, new, cur = _renorm_pair(exps, new, cur)
        prev, cur = cur, new
        sqc_prev = sqc
    return out_val, out_exp


def _log_norm_vec(alpha: float, beta: np.ndarray, m: np.ndarray) -> np.ndarray:
    """log h_m^{(alpha, beta)} vectorized; requires alpha + beta + 1 > 0."""
    return ((alpha + beta + 1.0) * LN2
            + gammaln(m + alpha + 1.0) + gammaln(m + beta + 1.0)
            - gammaln(m + 1.0) - gammaln(m + alpha + beta + 1.0)
            - np.log(2.0 * m + alpha + beta + 1.0))


def _cos_angle(x: BallPoint, y: BallPoint) -> float:
    if x.xi is None or y.xi is None:
        # only k = 0 survives when either radius vanishes
        return 1.0
    return min(1.0, max(-1.0, x.xi.dot(y.xi)))


def _correction_parts(bp: BallParams, n: int, x: BallPoint, y: BallPoint):
    """Per-k mass corrections: (m, corr, one_minus_rho, rho).

    corr[k] = (2rs)^k M_k K(t,1) K(u,1) / (1 + M_k K(1,1)), assembled as
    rho_k g_k(r) g_k(s) fully in log space.  For m(k) = 0 the rank-one kernel
    makes corr = rho * radsum exact, which the callers exploit.
    """
    mu, delta = bp.mu, bp.delta
    kk = np.arange(n + 1)
    m = (n - kk) // 2
    beta = kk + delta
    logk11 = _log_k11(mu, beta, m)
    logmk = math.log(bp.lam) - math.log(c_mu_d(mu, bp.d)) + kk * LN2 + logk11
    # g_k(r) = (sqrt(2) r)^k K_m(t,1) / sqrt(K_m(1,1)) = exp(ell) * R'_m(r,t)
    ell = (_log_kernel_pref(mu, beta, m)
           + 0.5 * _log_norm_vec(mu + 1.0, beta, m)
           - 0.5 * logk11)
    vr, er = _scaled_values_at_m(mu + 1.0, delta, n, x.r, x.t)
    same = (x.r == y.r) and (x.t == y.t)
    vs, es = (vr, er) if same else _scaled_values_at_m(mu + 1.0, delta, n, y.r, y.t)
    with np.errstate(divide="ignore"):
        log_corr = (log_expit(logmk) + 2.0 * ell
                    + np.log(np.abs(vr)) + er + np.log(np.abs(vs)) + es)
    corr = np.sign(vr) * np.sign(vs) * np.exp(log_corr)
    return m, corr, expit(-logmk), expit(logmk)


# -- kernels ------------------------------------------------------------------

def ball_kernel(bp: BallParams, n: int, x: BallPoint, y: BallPoint) -> float:
    """Classical degree-n reproducing kernel on the ball."""
    _check_degree(n)
    radsum = _scaled_pair_sums(bp.mu, bp.delta, n, x.r, x.t, y.r, y.t)
    sf = spherical_factor_sequence(bp.d, n, _cos_angle(x, y))
    return float(np.dot(radsum, sf)) / c_mu_d(bp.mu, bp.d)


def ball_kernel_modified(bp: BallParams, n: int, x: BallPoint, y: BallPoint) -> float:
    """Mass-modified degree-n kernel (Uvarov radial kernels, masses M_k)."""
    _check_degree(n)
    if x.r == 1.0 and y.r == 1.0 and _cos_angle(x, y) == 1.0:
        return _modified_boundary_diag(bp, n)
    radsum = _scaled_pair_sums(bp.mu, bp.delta, n, x.r, x.t, y.r, y.t)
    if bp.lam == 0.0:
        terms = radsum
    else:
        m, corr, one_minus_rho, _ = _correction_parts(bp, n, x, y)
        terms = np.where(m == 0, radsum * one_minus_rho, radsum - corr)
    sf = spherical_factor_sequence(bp.d, n, _cos_angle(x, y))
    return float(np.dot(terms, sf)) / c_mu_d(bp.mu, bp.d)


def ball_kernel_difference(bp: BallParams, n: int, x: BallPoint, y: BallPoint) -> float:
    """Classical minus modified kernel via the rank-one-per-k connection formula.

    Never formed by subtracting the two kernels; for lambda = 0 the result
    is identically zero.
    """
    _check_degree(n)
    if bp.lam == 0.0:
        return 0.0
    radsum = _scaled_pair_sums(bp.mu, bp.delta, n, x.r, x.t, y.r, y.t)
    m, corr, _, rho = _correction_parts(bp, n, x, y)
    corr = np.where(m == 0, radsum * rho, corr)
    sf = spherical_factor_sequence(bp.d, n, _cos_angle(x, y))
    return float(np.dot(corr, sf)) / c_mu_d(bp.mu, bp.d)


def _modified_boundary_diag(bp: BallParams, n: int) -> float:
    """Modified kernel diagonal at r = 1 through log-space closed forms, O(n)."""
    mu, delta = bp.mu, bp.delta
    kk = np.arange(n + 1)
    m = (n - kk) // 2
    beta = kk + delta
    log2k = kk * LN2 + _log_k11(mu, beta, m)
    if bp.lam > 0.0:
        logmk = math.log(bp.lam) - math.log(c_mu_d(mu, bp.d)) + log2k
    else:
        logmk = np.full(n + 1, -np.inf)
    vals = np.exp(log2k - np.logaddexp(0.0, logmk))
    sf = spherical_factor_sequence(bp.d, n, 1.0)
    return float(np.dot(vals, sf)) / c_mu_d(mu, bp.d)


def christoffel(bp: BallParams, n: int, x: BallPoint, modified: bool = False) -> float:
    """Christoffel function: reciprocal diagonal of the requested kernel."""
    diag = (ball_kernel_modified if modified else ball_kernel)(bp, n, x, x)
    return 1.0 / diag


def _check_degree(n: int) -> None:
    if n < 0:
        raise ParameterError(f"kernel degree must be >= 0, got {n}")


# -- quadrature ---------------------------------------------------------------

@dataclass(frozen=True)
class BallQuadratureRule:
    """Product rule over BallPoints for the normalized ball inner product."""

    points: tuple
    weights: np.ndarray

    def integrate(self, f: Callable[[BallPoint], float]) -> float:
        return float(sum(w * f(p) for p, w in zip(self.points, self.weights)))


def ball_quadrature(bp: BallParams, radial_nodes: int, angular_nodes: int) -> BallQuadratureRule:
    """Product quadrature: Gauss-Jacobi in t = 2r^2 - 1 times a sphere rule.

    Normalized so that integrating 1 against W_mu / omega_mu gives 1.  The
    radial rule uses the weight (1-t)^mu (1+t)^delta that the spherical-polar
    change of variables produces; the constant c_mu^d carries the Jacobian.
    """
    _require_d23(bp.d)
    radial = gauss_jacobi_rule(JacobiParams(bp.mu, bp.delta), radial_nodes)
    dirs, wdirs = sphere_rule(bp.d, angular_nodes)
    c = c_mu_d(bp.mu, bp.d)
    points = []
    weights = []
    for tnode, wt in zip(radial.nodes, radial.weights):
        r = math.sqrt((1.0 + tnode) / 2.0)
        for xi, wxi in zip(dirs, wdirs):
            points.append(BallPoint(r, xi))
            weights.append(c * wt * wxi)
    return BallQuadratureRule(points=tuple(points), weights=np.array(weights))
