"""Scale-safe special-function primitives and normalization constants.

Every Gamma ratio that appears downstream (Jacobi norms, kernel values at
the endpoint, binomial prefactors, huge point masses) is assembled from
log-Gamma differences and exponentiated once.  The quantities themselves
are polynomially sized, but their factor Gammas overflow a double already
near argument 170, so nothing in this package multiplies raw Gamma values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "LogValue",
    "log_gamma",
    "log_binomial",
    "omega_mu",
    "sigma_sphere",
    "c_mu_d",
    "harmonic_dim",
]


@dataclass(frozen=True)
class LogValue:
    """A real number stored as a sign and the natural log of its magnitude.

    ``sign`` is -1, 0 or +1; ``log_magnitude`` is ``-inf`` when sign is 0.
    Multiplication adds log magnitudes and multiplies signs, so products of
    astronomically large or small factors stay representable.
    """

    sign: int
    log_magnitude: float

    @classmethod
    def from_float(cls, x: float) -> "LogValue":
        if x == 0.0:
            return cls(0, -math.inf)
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.log_magnitude)
        except OverflowError:
            mag = math.inf
        return self.sign * mag

    def __mul__(self, other: "LogValue") -> "LogValue":
        return LogValue(self.sign * other.sign,
                        self.log_magnitude + other.log_magnitude)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogValue")
        return LogValue(self.sign * other.sign,
                        self.log_magnitude - other.log_magnitude)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ParameterError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_binomial(n: float, k: int) -> float:
    """ln C(n, k) for real n >= 0 and integer k >= 0.

    Integer n < k yields -inf (the binomial is zero); a non-integer n with
    n - k + 1 <= 0 has no meaning here and is rejected.
    """
    if n < 0:
        raise ParameterError(f"log_binomial requires n >= 0, got {n}")
    if k < 0:
        raise ParameterError(f"log_binomial requires k >= 0, got {k}")
    if k == 0:
        return 0.0
    if n - k + 1 <= 0:
        if abs(n - round(n)) < 1e-12:
            return -math.inf
        raise ParameterError(f"log_binomial undefined for n={n}, k={k}")
    return log_gamma(n + 1) - log_gamma(k + 1) - log_gamma(n - k + 1)


def omega_mu(mu: float, d: int) -> float:
    """Normalization constant of the ball weight (1 - |x|^2)^mu on B^d."""
    _check_mu_d(mu, d)
    return math.pi ** (d / 2) * math.exp(log_gamma(mu + 1) - log_gamma(mu + 1 + d / 2))


def sigma_sphere(d: int) -> float:
    """Surface area of the unit sphere S^{d-1}."""
    if d < 2:
        raise ParameterError(f"sigma_sphere requires d >= 2, got {d}")
    return 2.0 * math.pi ** (d / 2) / math.exp(log_gamma(d / 2))


def c_mu_d(mu: float, d: int) -> float:
    """The radial change-of-variables constant sigma_{d-1} / (2^{mu+d/2+1} omega_mu)."""
    _check_mu_d(mu, d)
    return 2.0 ** -(mu + d / 2 + 1) * sigma_sphere(d) / omega_mu(mu, d)


def harmonic_dim(k: int, d: int) -> int:
    """Dimension of the space of degree-k spherical harmonics in d variables.

    Uses the convention C(m, j) = 0 whenever m < j, so a single formula
    covers k = 0 and k = 1.
    """
    if k < 0:
        raise ParameterError(f"harmonic_dim requires k >= 0, got {k}")
    if d < 2:
        raise ParameterError(f"harmonic_dim requires d >= 2, got {d}")
    return _comb_or_zero(k + d - 1, d - 1) - _comb_or_zero(k + d - 3, d - 1)


def _comb_or_zero(m: int, j: int) -> int:
    if m < j or m < 0:
        return 0
    return math.comb(m, j)


def _check_mu_d(mu: float, d: int) -> None:
    if mu <= -1:
        raise ParameterError(f"ball exponent must satisfy mu > -1, got {mu}")
    if d < 2:
        raise ParameterError(f"dimension must satisfy d >= 2, got {d}")
