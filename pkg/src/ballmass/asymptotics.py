"""Large-degree behaviour of the mass-modified Christoffel functions.

Boundary: the modified kernel diagonal at |x| = 1, normalized by
C(n+d-1, n), tends to 2/lambda.  The O(n) evaluation reduces the kernel to
per-harmonic-degree fractions 2^k K_m(1,1) / (c + lambda 2^k K_m(1,1))
weighted by the harmonic dimensions, all from log-space closed forms.

Interior: the modified kernel diagonal normalized by C(n+d, d) tends to a
closed-form target independent of lambda; the classical-modified difference
obeys an n^{d-1} log n bound whose unquantified constant is probed by
bounded-ratio sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ball import (
    BallParams,
    BallPoint,
    _scaled_pair_sums,
    ball_kernel_difference,
    ball_kernel_modified,
)
from .errors import DomainError, ParameterError
from .harmonics import UnitDirection
from .jacobi import (
    LN2,
    _log_k11,
    _log_weight_mass,
    _recur_diag,
    _recur_offdiag_sq,
)
from .specfun import c_mu_d, harmonic_dim, log_gamma

__all__ = [
    "ConvergenceRecord",
    "SweepConfig",
    "boundary_ratio",
    "interior_limit_target",
    "interior_ratio",
    "difference_bound_check",
    "lemma_kernel_bound_ratio",
    "lemma_kernel_bound_profile",
    "geometric_schedule",
    "run_sweep",
    "sweep_error_envelope",
]


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a convergence sweep."""

    n: int
    d: int
    mu: float
    lam: float
    r: float
    ratio: float
    target: float
    abs_err: float
    rel_err: float

    @classmethod
    def build(cls, n: int, bp: BallParams, r: float,
              ratio: float, target: float) -> "ConvergenceRecord":
        abs_err = abs(ratio - target)
        return cls(n=n, d=bp.d, mu=bp.mu, lam=bp.lam, r=r, ratio=ratio,
                   target=target, abs_err=abs_err, rel_err=abs_err / abs(target))


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of a convergence sweep: mode 'boundary' or 'interior'."""

    params: BallParams
    mode: str
    n_values: tuple
    r: float = 1.0

    def __post_init__(self):
        if self.mode not in ("boundary", "interior"):
            raise ParameterError(f"unknown sweep mode {self.mode!r}")
        if self.mode == "interior" and not 0.0 <= self.r < 1.0:
            raise ParameterError(
                f"interior sweeps need 0 <= r < 1, got r={self.r}")


def _require_asymptotic_range(bp: BallParams) -> None:
    if bp.mu < -0.5:
        raise ParameterError(
            f"asymptotic results require mu >= -1/2, got mu={bp.mu}")


def boundary_ratio(bp: BallParams, n: int) -> float:
    """Modified kernel diagonal at |x| = 1 over C(n+d-1, n); limit 2/lambda.

    O(n): sums harmonic_dim(k, d) / (c e^{-L_k} + lambda) over k, where
    L_k = log(2^k K_m(1,1)) comes from the closed form of K(1,1) and
    m = floor((n-k)/2).
    """
    if bp.lam <= 0.0:
        raise ParameterError("the boundary limit requires lambda > 0")
    _require_asymptotic_range(bp)
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    kk = np.arange(n + 1)
    m = (n - kk) // 2
    beta = kk + bp.delta
    log2k = kk * LN2 + _log_k11(bp.mu, beta, m)
    frac = 1.0 / (c_mu_d(bp.mu, bp.d) * np.exp(-log2k) + bp.lam)
    dims = np.array([harmonic_dim(k, bp.d) for k in range(n + 1)], dtype=float)
    return float(np.dot(dims, frac)) / math.comb(n + bp.d - 1, n)


def interior_limit_target(bp: BallParams, r: float) -> float:
    """Closed-form interior limit of K~_n(x,x) / C(n+d, d) at |x| = r < 1."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"interior target needs 0 <= r < 1, got r={r}")
    _require_asymptotic_range(bp)
    const = math.exp(log_gamma(bp.mu + 1.0) + log_gamma((bp.d + 1.0) / 2.0)
                     - log_gamma(bp.mu + bp.d / 2.0 + 1.0)) / math.sqrt(math.pi)
    return const * (1.0 - r * r) ** (-0.5 - bp.mu)


def interior_ratio(bp: BallParams, n: int, x: BallPoint) -> float:
    """Modified kernel diagonal over C(n+d, d) at an interior point."""
    if x.r >= 1.0:
        raise DomainError(f"interior ratio needs r < 1, got r={x.r}")
    _require_asymptotic_range(bp)
    return ball_kernel_modified(bp, n, x, x) / math.comb(n + bp.d, bp.d)


def difference_bound_check(bp: BallParams, n: int, x: BallPoint) -> float:
    """Ratio of the kernel difference at x to its n^{d-1} log n bound with C = 1.

    The bound's constant is unquantified, so only boundedness of this ratio
    over n is meaningful.
    """
    if not 0.0 < x.r < 1.0:
        raise DomainError(f"difference bound needs 0 < r < 1, got r={x.r}")
    if n < 2:
        raise ParameterError(f"difference bound needs n >= 2, got {n}")
    diff = ball_kernel_difference(bp, n, x, x)
    one_minus_r2 = 1.0 - x.r * x.r
    bound = (n ** (bp.d - 1) * math.log(n)
             * (2.0 * one_minus_r2 + 4.0 / n ** 2) ** (-bp.mu - 0.5)
             * (2.0 * x.r * x.r + 4.0 / n ** 2) ** (-bp.delta - 0.5))
    return diff / bound


def lemma_kernel_bound_ratio(mu: float, delta: float, n: int, k: int, t: float) -> float:
    """Ratio of K_m^{(mu, k+delta)}(t, t) to the uniform kernel bound with C = 1.

    m = floor((n-k)/2) must be >= 1 and t must lie in (-1, 1].  The
    (1+t)^{-k} factor of the bound cancels against the scaled kernel, so the
    ratio is formed without large powers.
    """
    m = (n - k) // 2
    if m < 1:
        raise ParameterError(f"need floor((n-k)/2) >= 1, got n={n}, k={k}")
    if not -1.0 < t <= 1.0:
        raise DomainError(f"t must lie in (-1, 1], got {t}")
    scaled = _scaled_diag_sum(mu, k + delta, m, k, t)
    return scaled / _lemma_bound_scaled(mu, delta, n, t)


def lemma_kernel_bound_profile(mu: float, delta: float, n: int, t: float) -> np.ndarray:
    """lemma_kernel_bound_ratio over every k with m(k) >= 1, in one pass."""
    if not -1.0 < t <= 1.0:
        raise DomainError(f"t must lie in (-1, 1], got {t}")
    r = math.sqrt((1.0 + t) / 2.0)
    scaled = _scaled_pair_sums(mu, delta, n, r, t, r, t)
    kmax = n - 2  # largest k with m(k) >= 1
    return scaled[:kmax + 1] / _lemma_bound_scaled(mu, delta, n, t)


def _lemma_bound_scaled(mu: float, delta: float, n: int, t: float) -> float:
    """The kernel bound's right-hand side times (1+t)^k (C = 1)."""
    half = n // 2 + 1.0
    eps = 1.0 / half ** 2
    return (half * (1.0 - t + eps) ** (-mu - 0.5)
            * (1.0 + t + eps) ** (-delta - 0.5))


def _scaled_diag_sum(alpha: float, beta: float, m: int, k: int, t: float) -> float:
    """(1+t)^k K_m^{(alpha, beta)}(t, t) via the scaled orthonormal recurrence."""
    log_scale = 0.0 if k == 0 else k * math.log1p(t) if t > -1.0 else -math.inf
    cur = math.exp(0.5 * log_scale - 0.5 * float(_log_weight_mass(alpha, beta)))
    total = cur * cur
    prev = 0.0
    sqc_next = math.sqrt(_recur_offdiag_sq(alpha, beta, 1)) if m >= 1 else None
    for j in range(1, m + 1):
        sqc = sqc_next
        new = ((t - _recur_diag(alpha, beta, j - 1)) * cur - (
            math.sqrt(_recur_offdiag_sq(alpha, beta, j - 1)) if j >= 2 else 0.0) * prev) / sqc
        total += new * new
        prev, cur = cur, new
        if j < m:
            sqc_next = math.sqrt(_recur_offdiag_sq(alpha, beta, j + 1))
    return total


def geometric_schedule(n_max: int, start: int = 125, factor: int = 2) -> list:
    """Degrees start, start*factor, ... capped by and including n_max."""
    if n_max < 1:
        return []
    if n_max < start:
        return [n_max]
    schedule = []
    n = start
    while n <= n_max:
        schedule.append(n)
        n *= factor
    if schedule[-1] != n_max:
        schedule.append(n_max)
    return schedule


def sweep_error_envelope(cfg: SweepConfig, n: int, halfwidth: int = 1) -> float:
    """Worst relative error over degrees n-halfwidth .. n+halfwidth.

    Converged interior sweeps oscillate around the target with a period of a
    few degrees, so comparing single-degree errors between two already
    converged rows is noise; the envelope is the monotone quantity.
    """
    ns = tuple(m for m in range(n - halfwidth, n + halfwidth + 1) if m >= 0)
    recs = run_sweep(SweepConfig(cfg.params, cfg.mode, ns, r=cfg.r))
    return max(rec.rel_err for rec in recs)


def run_sweep(cfg: SweepConfig) -> list:
    """Evaluate the configured ratio over the degree schedule.

    Deterministic; an empty schedule yields an empty list.  Interior sweeps
    place the point on the first coordinate axis (the diagonal kernel is
    rotation invariant, so only r matters).
    """
    bp = cfg.params
    records = []
    if cfg.mode == "boundary":
        if bp.lam <= 0.0:
            raise ParameterError("boundary sweeps require lambda > 0")
        target = 2.0 / bp.lam
        for n in cfg.n_values:
            ratio = boundary_ratio(bp, n)
            records.append(ConvergenceRecord.build(n, bp, 1.0, ratio, target))
    else:
        target = interior_limit_target(bp, cfg.r)
        x = BallPoint(cfg.r, UnitDirection.axis(bp.d) if cfg.r > 0 else None)
        for n in cfg.n_values:
            ratio = interior_ratio(bp, n, x)
            records.append(ConvergenceRecord.build(n, bp, cfg.r, ratio, target))
    return records
