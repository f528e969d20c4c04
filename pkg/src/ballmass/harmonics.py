"""Real orthonormal spherical harmonics for d = 2 and d = 3, plus sphere rules.

These bases serve as the brute-force oracle behind the kernel reductions:
they are orthonormal with respect to the *normalized* surface measure
sigma_{d-1}^{-1} d(sigma).  Basis order is fixed so test vectors are
deterministic: for d = 2 cosine before sine, for d = 3 by azimuthal index
m = -k..k.  The d = 3 functions carry no Condon-Shortley phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, UnsupportedDimensionError
from .specfun import harmonic_dim

__all__ = [
    "UnitDirection",
    "harmonic_basis_eval",
    "harmonic_basis_values",
    "addition_sum",
    "sphere_rule",
]

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class UnitDirection:
    """A point of S^{d-1} stored as cartesian coordinates."""

    d: int
    coords: tuple

    def __post_init__(self):
        if self.d != len(self.coords):
            raise ParameterError("coordinate count does not match dimension")
        norm = math.sqrt(sum(c * c for c in self.coords))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ParameterError(f"direction is not unit length: |x| = {norm}")

    @classmethod
    def from_angle(cls, theta: float) -> "UnitDirection":
        return cls(2, (math.cos(theta), math.sin(theta)))

    @classmethod
    def from_polar(cls, theta: float, phi: float) -> "UnitDirection":
        """d = 3 direction from azimuth theta and polar angle phi."""
        sp = math.sin(phi)
        return cls(3, (sp * math.cos(theta), sp * math.sin(theta), math.cos(phi)))

    @classmethod
    def from_coords(cls, coords, normalize: bool = False) -> "UnitDirection":
        c = np.asarray(coords, dtype=float)
        if normalize:
            norm = float(np.linalg.norm(c))
            if norm == 0.0:
                raise ParameterError("cannot normalize the zero vector")
            c = c / norm
        return cls(len(c), tuple(float(v) for v in c))

    @classmethod
    def axis(cls, d: int, i: int = 0) -> "UnitDirection":
        coords = [0.0] * d
        coords[i] = 1.0
        return cls(d, tuple(coords))

    def dot(self, other: "UnitDirection") -> float:
        return float(sum(a * b for a, b in zip(self.coords, other.coords)))

    @property
    def theta(self) -> float:
        return math.atan2(self.coords[1], self.coords[0])


def _assoc_legendre(k: int, m: int, z):
    """Associated Legendre P_k^m(z) without the Condon-Shortley phase.

    z may be a scalar or ndarray; 0 <= m <= k.
    """
    z = np.asarray(z, dtype=float)
    # P_m^m = (2m-1)!! (1-z^2)^{m/2}
    pmm = np.ones_like(z)
    if m > 0:
        somx2 = np.sqrt(np.maximum(0.0, (1.0 - z) * (1.0 + z)))
        fact = 1.0
        for _ in range(m):
            pmm = pmm * fact * somx2
            fact += 2.0
    if k == m:
        return pmm
    pmmp1 = z * (2.0 * m + 1.0) * pmm
    if k == m + 1:
        return pmmp1
    for ell in range(m + 2, k + 1):
        pmm, pmmp1 = pmmp1, ((2.0 * ell - 1.0) * z * pmmp1
                             - (ell + m - 1.0) * pmm) / (ell - m)
    return pmmp1


def harmonic_basis_values(d: int, k: int, nu: int, coords: np.ndarray) -> np.ndarray:
    """Values of the nu-th degree-k harmonic at an (npoints, d) coordinate array."""
    if d not in (2, 3):
        raise UnsupportedDimensionError(
            f"explicit harmonics implemented for d in {{2, 3}}, got d={d}")
    if k < 0:
        raise ParameterError(f"harmonic degree must be >= 0, got {k}")
    if not 1 <= nu <= harmonic_dim(k, d):
        raise ParameterError(
            f"harmonic index nu={nu} out of range [1, {harmonic_dim(k, d)}]")
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    if k == 0:
        return np.ones(coords.shape[0])
    theta = np.arctan2(coords[:, 1], coords[:, 0])
    if d == 2:
        # nu = 1: sqrt(2) cos(k theta), nu = 2: sqrt(2) sin(k theta)
        if nu == 1:
            return math.sqrt(2.0) * np.cos(k * theta)
        return math.sqrt(2.0) * np.sin(k * theta)
    z = coords[:, 2]
    m = nu - 1 - k  # azimuthal index, -k..k
    am = abs(m)
    # normalization for <Y, Y> = 1 under the normalized surface measure
    norm = math.exp(0.5 * (math.log(2.0 * k + 1.0)
                           + math.lgamma(k - am + 1.0) - math.lgamma(k + am + 1.0)))
    leg = _assoc_legendre(k, am, z)
    if m == 0:
        return norm * leg
    if m > 0:
        return math.sqrt(2.0) * norm * leg * np.cos(m * theta)
    return math.sqrt(2.0) * norm * leg * np.sin(am * theta)


def harmonic_basis_eval(d: int, k: int, nu: int, xi: UnitDirection) -> float:
    """Value of the nu-th element of the fixed orthonormal basis of H_k^d at xi."""
    vals = harmonic_basis_values(d, k, nu, np.asarray(xi.coords)[None, :])
    return float(vals[0])


def addition_sum(d: int, k: int, xi: UnitDirection, rho: UnitDirection) -> float:
    """sum_nu Y_nu^k(xi) Y_nu^k(rho); equals spherical_factor(d, k, <xi, rho>)."""
    total = 0.0
    for nu in range(1, harmonic_dim(k, d) + 1):
        total += harmonic_basis_eval(d, k, nu, xi) * harmonic_basis_eval(d, k, nu, rho)
    return total


def sphere_rule(d: int, n: int):
    """Quadrature for the normalized surface measure on S^{d-1}.

    d = 2: n-point trapezoid in the angle, exact for trigonometric
    polynomials of degree <= n-1.  d = 3: Gauss-Legendre with n nodes in
    cos(phi) times a 2n-point trapezoid in the azimuth, exact for spherical
    polynomials of degree <= 2n-1.  Weights sum to 1.

    Returns (directions, weights).
    """
    if n < 1:
        raise ParameterError(f"sphere_rule requires n >= 1, got {n}")
    if d == 2:
        thetas = 2.0 * math.pi * np.arange(n) / n
        dirs = [UnitDirection.from_angle(t) for t in thetas]
        return dirs, np.full(n, 1.0 / n)
    if d == 3:
        z, wz = np.polynomial.legendre.leggauss(n)
        ntheta = 2 * n
        thetas = 2.0 * math.pi * np.arange(ntheta) / ntheta
        dirs = []
        weights = []
        for zi, wi in zip(z, wz):
            s = math.sqrt(max(0.0, 1.0 - zi * zi))
            for t in thetas:
                dirs.append(UnitDirection(3, (s * math.cos(t), s * math.sin(t), zi)))
                weights.append(0.5 * wi / ntheta)
        return dirs, np.array(weights)
    raise UnsupportedDimensionError(
        f"sphere rules implemented for d in {{2, 3}}, got d={d}")
