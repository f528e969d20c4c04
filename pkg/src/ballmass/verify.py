"""Named verification suites behind the CLI ``verify`` command.

Each check exercises one of the library's defining identities against an
independent oracle (quadrature inner products, brute-force basis sums,
moment formulas) and reports its worst observed error against a tolerance.
The pytest suite drives the same helpers on denser grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import boundary_ratio, interior_ratio, lemma_kernel_bound_profile
from .ball import (
    BallParams,
    BallPoint,
    RadialIndex,
    ball_kernel,
    ball_kernel_difference,
    ball_kernel_modified,
    classical_basis_eval,
    classical_norm_H,
    mass_for_harmonic_degree_log,
    modified_basis_eval,
    modified_norm_H,
)
from .harmonics import UnitDirection, harmonic_basis_values, sphere_rule
from .jacobi import (
    JacobiParams,
    gauss_jacobi_rule,
    jacobi_eval,
    jacobi_kernel_at_one,
    jacobi_kernel_one_one,
    jacobi_norm,
    log_jacobi_norm,
)
from .specfun import c_mu_d, harmonic_dim, log_binomial, log_gamma
from .uvarov import (
    UvarovParams,
    uvarov_eval,
    uvarov_kernel,
    uvarov_kernel_one_one,
    uvarov_norm,
    uvarov_value_at_one,
)

__all__ = [
    "CheckResult",
    "SUITES",
    "run_suites",
    "jacobi_suite",
    "uvarov_suite",
    "ball_suite",
    "asymptotics_suite",
    "ball_basis_indices",
    "ball_gram",
    "brute_force_ball_kernel",
    "uvarov_gram",
    "jacobi_moment",
    "random_ball_points",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    error: float
    tol: float


def _check(name: str, error: float, tol: float) -> CheckResult:
    return CheckResult(name=name, passed=bool(error <= tol) and math.isfinite(error),
                       error=float(error), tol=tol)


# -- shared oracle machinery --------------------------------------------------

def jacobi_moment(alpha: float, beta: float, k: int) -> float:
    """Exact moment of t^k against (1-t)^alpha (1+t)^beta on [-1, 1].

    Independent of the quadrature being tested: integrating the derivative
    of (1-t)^{alpha+1} (1+t)^{beta+1} t^{k-1} (whose boundary terms vanish)
    gives the two-term recursion
    (alpha+beta+k+1) I_k = (k-1) I_{k-2} + (beta-alpha) I_{k-1}.
    """
    i_prev2 = 2.0 ** (alpha + beta + 1.0) * math.exp(
        log_gamma(alpha + 1.0) + log_gamma(beta + 1.0)
        - log_gamma(alpha + beta + 2.0))
    if k == 0:
        return i_prev2
    i_prev1 = (beta - alpha) * i_prev2 / (alpha + beta + 2.0)
    if k == 1:
        return i_prev1
    for m in range(2, k + 1):
        i_prev2, i_prev1 = i_prev1, (
            (m - 1) * i_prev2 + (beta - alpha) * i_prev1) / (alpha + beta + m + 1.0)
    return i_prev1


def ball_basis_indices(d: int, nmax: int):
    """All (RadialIndex, nu) triples of the mutually orthogonal basis up to degree nmax."""
    out = []
    for n in range(nmax + 1):
        for j in range(n // 2 + 1):
            for nu in range(1, harmonic_dim(n - 2 * j, d) + 1):
                out.append((RadialIndex(n, j), nu))
    return out


def _ball_grid(bp: BallParams, radial_nodes: int, angular_nodes: int):
    """Flattened product-rule grid arrays (t, r, coords, weights)."""
    radial = gauss_jacobi_rule(JacobiParams(bp.mu, bp.delta), radial_nodes)
    dirs, wdirs = sphere_rule(bp.d, angular_nodes)
    coords_dirs = np.array([d_.coords for d_ in dirs])
    t = np.repeat(radial.nodes, len(dirs))
    r = np.sqrt((1.0 + t) / 2.0)
    coords = np.tile(coords_dirs, (radial_nodes, 1))
    w = np.repeat(radial.weights, len(dirs)) * np.tile(wdirs, radial_nodes)
    w = w * c_mu_d(bp.mu, bp.d)
    return t, r, coords, w, coords_dirs, wdirs


def _basis_columns(bp: BallParams, indices, t, r, coords, modified: bool):
    cols = []
    for idx, nu in indices:
        k = idx.k
        params = JacobiParams(bp.mu, k + bp.delta)
        if modified:
            u = UvarovParams.from_log_mass(
                params, mass_for_harmonic_degree_log(bp, k).log_magnitude)
            radial_vals = uvarov_eval(u, idx.j, t)
        else:
            radial_vals = jacobi_eval(params, idx.j, t)
        ang = harmonic_basis_values(bp.d, k, nu, coords)
        cols.append(radial_vals * r ** k * ang)
    return np.column_stack(cols)


def ball_gram(bp: BallParams, nmax: int, modified: bool,
              radial_nodes: int = 0, angular_nodes: int = 0):
    """Quadrature Gram matrix of the ball basis and the predicted norms.

    The modified Gram adds the lambda-weighted sphere term of the inner
    product.  Rules default to sizes exact for the degree-2*nmax products
    (for d = 2 the trapezoid needs 2*nmax+1 points to avoid aliasing).
    Returns (G, H) with H the predicted diagonal.
    """
    if radial_nodes == 0:
        radial_nodes = nmax + 2
    if angular_nodes == 0:
        angular_nodes = 2 * nmax + 4 if bp.d == 2 else nmax + 2
    indices = ball_basis_indices(bp.d, nmax)
    t, r, coords, w, coords_dirs, wdirs = _ball_grid(bp, radial_nodes, angular_nodes)
    v = _basis_columns(bp, indices, t, r, coords, modified)
    gram = v.T @ (v * w[:, None])
    if modified and bp.lam > 0.0:
        ones = np.ones(len(coords_dirs))
        vs = _basis_columns(bp, indices, ones, ones, coords_dirs, modified)
        gram = gram + bp.lam * vs.T @ (vs * wdirs[:, None])
    norm = modified_norm_H if modified else classical_norm_H
    h = np.array([norm(bp, idx) for idx, _ in indices])
    return gram, h


def _gram_error(gram: np.ndarray, h: np.ndarray) -> float:
    scale = np.sqrt(np.outer(h, h))
    return float(np.max(np.abs(gram - np.diag(h)) / scale))


def brute_force_ball_kernel(bp: BallParams, n: int, x: BallPoint, y: BallPoint,
                            modified: bool) -> float:
    """Kernel oracle: direct sum over the explicit basis, degrees <= n."""
    total = 0.0
    basis = modified_basis_eval if modified else classical_basis_eval
    norm = modified_norm_H if modified else classical_norm_H
    for idx, nu in ball_basis_indices(bp.d, n):
        total += basis(bp, idx, nu, x) * basis(bp, idx, nu, y) / norm(bp, idx)
    return total


def random_ball_points(d: int, count: int, rng, include_boundary: bool = True):
    """Deterministic sample of ball points; mixes interior, boundary and center."""
    pts = []
    for i in range(count):
        vec = rng.standard_normal(d)
        vec /= np.linalg.norm(vec)
        if include_boundary and i % 5 == 4:
            r = 1.0
        elif i % 7 == 6:
            r = 0.0
        else:
            r = rng.random() ** (1.0 / d)
        xi = UnitDirection.from_coords(vec) if r > 0 else None
        pts.append(BallPoint(r, xi))
    return pts


def uvarov_gram(u: UvarovParams, kmax: int, nodes: int = 0):
    """Gram of q_0..q_kmax under quadrature plus the point-mass term."""
    if nodes == 0:
        nodes = kmax + 1
    rule = gauss_jacobi_rule(u.base, nodes)
    v = np.column_stack([uvarov_eval(u, k, rule.nodes) for k in range(kmax + 1)])
    v1 = np.array([uvarov_value_at_one(u, k) for k in range(kmax + 1)])
    gram = v.T @ (v * rule.weights[:, None]) + u.mass * np.outer(v1, v1)
    h = np.array([uvarov_norm(u, k) for k in range(kmax + 1)])
    return gram, h


# -- suites -------------------------------------------------------------------

def jacobi_suite(tol: float | None = None):
    checks = []
    pairs = [(0.0, 0.0), (0.5, 0.0), (0.0, 1.5), (2.0, 3.0)]

    worst = 0.0
    for a, b in pairs:
        p = JacobiParams(a, b)
        rule = gauss_jacobi_rule(p, 45)
        v = np.column_stack([jacobi_eval(p, i, rule.nodes) for i in range(41)])
        gram = v.T @ (v * rule.weights[:, None])
        h = np.array([jacobi_norm(p, i) for i in range(41)])
        worst = max(worst, _gram_error(gram, h))
    checks.append(_check("jacobi orthogonality (quadrature Gram)", worst, tol or 1e-9))

    worst = 0.0
    for a, b in [(0.0, 0.0), (0.5, 1.5), (2.0, 3.0)]:
        p = JacobiParams(a, b)
        for n in range(201):
            val = jacobi_eval(p, n, 1.0)
            ref = math.exp(log_binomial(n + a, n))
            worst = max(worst, abs(val - ref) / ref)
    checks.append(_check("value at endpoint equals binomial", worst, tol or 1e-11))

    worst = 0.0
    grid = np.linspace(-1.0, 1.0, 101)
    for a, b in [(0.0, 0.0), (0.5, 1.5)]:
        p = JacobiParams(a, b)
        seq1 = np.column_stack(
            [jacobi_eval(p, j, grid) * math.exp(-0.5 * log_jacobi_norm(p, j))
             for j in range(101)])
        at_one = np.array(
            [jacobi_eval(p, j, 1.0) * math.exp(-0.5 * log_jacobi_norm(p, j))
             for j in range(101)])
        direct = np.cumsum(seq1 * at_one, axis=1)  # direct[t, n] = K_n(t, 1)
        for n in range(0, 101, 7):
            closed = jacobi_kernel_at_one(p, n, grid)
            scale = jacobi_kernel_one_one(p, n)
            worst = max(worst, float(np.max(np.abs(closed - direct[:, n]) / scale)))
    checks.append(_check("kernel-at-endpoint closed form vs direct sum",
                         worst, tol or 1e-10))

    worst = 0.0
    for a, b in pairs:
        p = JacobiParams(a, b)
        for n in (1, 2, 5, 20):
            rule = gauss_jacobi_rule(p, n)
            m0 = jacobi_moment(a, b, 0)
            for k in range(2 * n):
                approx = float(np.dot(rule.weights, rule.nodes ** k))
                exact = jacobi_moment(a, b, k)
                worst = max(worst, abs(approx - exact) / max(abs(exact), m0))
    checks.append(_check("Gauss rule degree-of-exactness (moment oracle)",
                         worst, tol or 1e-11))

    worst = -math.inf
    for a, b in pairs:
        p = JacobiParams(a, b)
        for t in np.linspace(-1.0, 1.0, 21):
            seq = jacobi_eval(p, 0, t) ** 2 / jacobi_norm(p, 0)
            diag_prev = seq
            if diag_prev <= 0:
                worst = max(worst, -diag_prev)
            for n in range(1, 30):
                inc = (jacobi_eval(p, n, t) ** 2 / jacobi_norm(p, n))
                diag = diag_prev + inc
                if inc < 0 or diag <= 0:
                    worst = max(worst, max(-inc, -diag))
                diag_prev = diag
    checks.append(_check("kernel diagonal positive and nondecreasing",
                         max(worst, 0.0), tol or 0.0))
    return checks


def uvarov_suite(tol: float | None = None):
    checks = []
    pairs = [(0.0, 0.0), (0.5, 1.5)]
    masses = [0.1, 1.0, 10.0]

    worst = 0.0
    for a, b in pairs:
        for mass in masses:
            u = UvarovParams(JacobiParams(a, b), mass)
            gram, h = uvarov_gram(u, 30, nodes=31)
            worst = max(worst, _gram_error(gram, h))
    checks.append(_check("modified orthogonality (quadrature + mass Gram)",
                         worst, tol or 1e-9))

    worst = 0.0
    grid = np.linspace(-1.0, 1.0, 21)
    for a, b in pairs:
        for mass in (1.0, 10.0):
            u = UvarovParams(JacobiParams(a, b), mass)
            q_cols = np.column_stack([uvarov_eval(u, j, grid) for j in range(31)])
            hvals = np.array([uvarov_norm(u, j) for j in range(31)])
            for k in (1, 5, 15, 30):
                direct = (q_cols[:, :k + 1] / hvals[:k + 1]) @ q_cols[:, :k + 1].T
                closed = np.array([[uvarov_kernel(u, k, t, s) for s in grid]
                                   for t in grid])
                diag = np.diag(closed)
                scale = np.sqrt(np.outer(diag, diag))
                worst = max(worst, float(np.max(np.abs(closed - direct) / scale)))
    checks.append(_check("modified kernel closed form vs orthonormal sum",
                         worst, tol or 1e-9))

    worst = 0.0
    for a, b in pairs:
        for mass in masses:
            u = UvarovParams(JacobiParams(a, b), mass)
            for k in range(31):
                lhs = uvarov_value_at_one(u, k)
                if k > 0:
                    lhs = lhs * (1.0 + mass * jacobi_kernel_one_one(u.base, k - 1))
                ref = math.exp(log_binomial(k + a, k))
                worst = max(worst, abs(lhs - ref) / ref)
    checks.append(_check("endpoint value times mass denominator recovers P(1)",
                         worst, tol or 1e-12))

    worst = 0.0
    for a, b in pairs:
        for mass in masses:
            u = UvarovParams(JacobiParams(a, b), mass)
            for k in range(31):
                deflated = uvarov_kernel_one_one(u, k)
                classical = jacobi_kernel_one_one(u.base, k)
                if deflated >= classical:
                    worst = max(worst, (deflated - classical) / classical + 1.0)
    checks.append(_check("mass deflates the kernel at the mass point",
                         worst, tol or 0.0))

    worst = 0.0
    for a, b in pairs:
        for mass in masses:
            u = UvarovParams(JacobiParams(a, b), mass)
            ref = jacobi_norm(u.base, 0) + mass
            worst = max(worst, abs(uvarov_norm(u, 0) - ref) / ref)
    checks.append(_check("degree-0 modified norm equals h_0 + M", worst, tol or 1e-12))
    return checks


def ball_suite(tol: float | None = None, pair_count: int = 40):
    checks = []

    worst = 0.0
    for d, mu in [(2, 0.0), (2, 0.5), (3, 0.0), (3, 0.5)]:
        gram, h = ball_gram(BallParams(d, mu), 8, modified=False)
        worst = max(worst, _gram_error(gram, h))
    checks.append(_check("classical ball basis orthogonality", worst, tol or 1e-8))

    worst = 0.0
    for d, mu, lam in [(2, 0.0, 0.5), (2, 0.5, 2.0), (3, 0.0, 2.0), (3, 0.5, 0.5)]:
        gram, h = ball_gram(BallParams(d, mu, lam), 8, modified=True)
        worst = max(worst, _gram_error(gram, h))
    checks.append(_check("modified ball basis orthogonality", worst, tol or 1e-8))

    rng = np.random.default_rng(20260810)
    worst = 0.0
    for d in (2, 3):
        bp = BallParams(d, 0.5, 1.5)
        pts = random_ball_points(d, pair_count, rng)
        for n in (0, 3, 8):
            for i in range(0, len(pts) - 1, 2):
                x, y = pts[i], pts[i + 1]
                scale = math.sqrt(ball_kernel(bp, n, x, x) * ball_kernel(bp, n, y, y))
                err_c = abs(ball_kernel(bp, n, x, y)
                            - brute_force_ball_kernel(bp, n, x, y, False)) / scale
                scale_m = math.sqrt(ball_kernel_modified(bp, n, x, x)
                                    * ball_kernel_modified(bp, n, y, y))
                err_m = abs(ball_kernel_modified(bp, n, x, y)
                            - brute_force_ball_kernel(bp, n, x, y, True)) / scale_m
                worst = max(worst, err_c, err_m)
    checks.append(_check("reduced kernels vs brute-force basis sums",
                         worst, tol or 1e-9))

    worst = 0.0
    for d in (2, 3):
        bp = BallParams(d, 0.0, 1.0)
        pts = random_ball_points(d, 12, rng)
        for n in (8, 30):
            for i in range(0, len(pts) - 1, 2):
                x, y = pts[i], pts[i + 1]
                direct = ball_kernel(bp, n, x, y) - ball_kernel_modified(bp, n, x, y)
                formula = ball_kernel_difference(bp, n, x, y)
                scale = max(abs(formula), abs(direct),
                            math.sqrt(ball_kernel_difference(bp, n, x, x)
                                      * ball_kernel_difference(bp, n, y, y)))
                worst = max(worst, abs(direct - formula) / scale)
    checks.append(_check("kernel-difference formula vs direct subtraction",
                         worst, tol or 1e-8))

    worst = 0.0
    x = BallPoint(0.37, UnitDirection.axis(2))
    for lam in (0.25, 1.0, 4.0, 100.0):
        bp = BallParams(2, 0.5, lam)
        val = ball_kernel_modified(bp, 0, x, x)
        worst = max(worst, abs(val - 1.0 / (1.0 + lam)) * (1.0 + lam))
    checks.append(_check("degree-0 modified kernel equals 1/(1+lambda)",
                         worst, tol or 1e-12))

    worst = 0.0
    for d in (2, 3):
        for lam, expect_positive in ((1.0, True), (0.0, False)):
            bp = BallParams(d, 0.0, lam)
            for r in np.linspace(0.0, 1.0, 11):
                x = BallPoint(r, UnitDirection.axis(d) if r > 0 else None)
                for n in (5, 25, 100):
                    diff = ball_kernel_difference(bp, n, x, x)
                    if expect_positive and diff <= 0.0:
                        worst = max(worst, 1.0)
                    if not expect_positive and diff != 0.0:
                        worst = max(worst, abs(diff))
    checks.append(_check("kernel difference positive iff lambda > 0",
                         worst, tol or 0.0))

    worst = 0.0
    bp = BallParams(2, 0.5, 1.0)
    for r in (0.0, 0.45, 0.9, 1.0):
        x = BallPoint(r, UnitDirection.axis(2) if r > 0 else None)
        prev_c = prev_m = -math.inf
        for n in range(0, 30):
            diag_c = ball_kernel(bp, n, x, x)
            diag_m = ball_kernel_modified(bp, n, x, x)
            if diag_c < prev_c - 1e-13 * abs(prev_c):
                worst = max(worst, prev_c - diag_c)
            if diag_m < prev_m - 1e-13 * abs(prev_m):
                worst = max(worst, prev_m - diag_m)
            prev_c, prev_m = diag_c, diag_m
    checks.append(_check("kernel diagonals nondecreasing in degree",
                         worst, tol or 0.0))
    return checks


def asymptotics_suite(tol: float | None = None):
    checks = []

    worst = 0.0
    for d in (2, 3):
        for mu in (0.0, 0.5):
            bp = BallParams(d, mu, 1.0)
            x = BallPoint(1.0, UnitDirection.axis(d))
            for n in (1, 2, 3, 5, 10, 25, 50, 100, 200):
                via_kernel = ball_kernel_modified(bp, n, x, x) / math.comb(n + d - 1, n)
                direct = boundary_ratio(bp, n)
                worst = max(worst, abs(via_kernel - direct) / direct)
    checks.append(_check("boundary ratio closed form vs kernel path",
                         worst, tol or 1e-8))

    worst = 0.0
    for d in (2, 3):
        bp = BallParams(d, 0.5, 1.0)
        x = BallPoint(1.0, UnitDirection.axis(d))
        for n in (10, 40, 100):
            recon = (ball_kernel(bp, n, x, x)
                     - ball_kernel_difference(bp, n, x, x))
            direct = ball_kernel_modified(bp, n, x, x)
            worst = max(worst, abs(recon - direct) / direct)
    checks.append(_check("boundary diagonal vs classical-minus-difference",
                         worst, tol or 1e-8))

    worst = 0.0
    for d in (2, 3):
        for n in (50, 200):
            prev = math.inf
            for lam in (0.5, 1.0, 2.0, 4.0):
                val = boundary_ratio(BallParams(d, 0.0, lam), n)
                if val >= prev:
                    worst = max(worst, val - prev + 1.0)
                prev = val
    checks.append(_check("boundary ratio strictly decreasing in lambda",
                         worst, tol or 0.0))

    worst = 0.0
    for d in (2, 3):
        for mu in (0.0, 0.5):
            for lam in (0.5, 1.0, 2.0):
                for n in (100, 400, 1000):
                    val = boundary_ratio(BallParams(d, mu, lam), n)
                    guard = 2.5 / lam
                    if val > guard:
                        worst = max(worst, (val - guard) * lam)
    checks.append(_check("boundary ratio within the 2.5/lambda guard",
                         worst, tol or 0.0))

    worst = 0.0
    tgrid = np.linspace(-0.95, 1.0, 41)
    for mu, delta in [(0.0, 0.0), (0.5, 0.5)]:
        sups = {}
        for n in (200, 400):
            sup = 0.0
            for t in tgrid:
                prof = lemma_kernel_bound_profile(mu, delta, n, float(t))
                if not np.all(np.isfinite(prof)):
                    sup = math.inf
                    break
                sup = max(sup, float(np.max(prof)))
            sups[n] = sup
        if not math.isfinite(sups[400]):
            worst = math.inf
        else:
            worst = max(worst, sups[400] / sups[200] - 1.0)
    checks.append(_check("kernel-bound ratio supremum stable from n=200 to n=400",
                         worst, tol or 0.10))

    x = BallPoint(0.5, UnitDirection.axis(2))
    r0 = interior_ratio(BallParams(2, 0.0, 0.0), 1200, x)
    r1 = interior_ratio(BallParams(2, 0.0, 1.0), 1200, x)
    worst = abs(r0 - r1) / r0
    checks.append(_check("interior ratio insensitive to the sphere mass",
                         worst, tol or 0.05))
    return checks


SUITES = {
    "jacobi": jacobi_suite,
    "uvarov": uvarov_suite,
    "ball": ball_suite,
    "asymptotics": asymptotics_suite,
}


def run_suites(which: str, tol: float | None = None):
    """Run one suite or all of them; returns a list of CheckResult."""
    if which == "all":
        results = []
        for name in ("jacobi", "uvarov", "ball", "asymptotics"):
            results.extend(SUITES[name](tol))
        return results
    if which not in SUITES:
        raise ValueError(f"unknown suite {which!r}; choose from "
                         f"all, {', '.join(SUITES)}")
    return SUITES[which](tol)
