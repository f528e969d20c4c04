"""Gegenbauer and Chebyshev evaluation for the spherical addition-formula factor.

For d >= 3 the factor attached to harmonic degree k is ((k+delta)/delta) *
C_k^delta of the cosine of the angle, with delta = (d-2)/2.  For d = 2 the
Gegenbauer limit degenerates to Chebyshev polynomials; the limit relation
yields 2 T_k only for k >= 1, while at k = 0 the addition formula requires
the factor 1 (a single constant harmonic).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterError

__all__ = [
    "gegenbauer_eval",
    "chebyshev_eval",
    "spherical_factor",
    "spherical_factor_sequence",
]


def gegenbauer_eval(delta: float, k: int, s: float) -> float:
    """C_k^delta(s) by the standard three-term recurrence; requires delta > 0."""
    if delta <= 0:
        raise ParameterError(f"gegenbauer_eval requires delta > 0, got {delta}"
                             " (use the Chebyshev branch for d = 2)")
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    if k == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * delta * s
    for j in range(2, k + 1):
        prev, cur = cur, (2.0 * (j + delta - 1.0) * s * cur
                          - (j + 2.0 * delta - 2.0) * prev) / j
    return cur


def chebyshev_eval(k: int, s: float) -> float:
    """First-kind Chebyshev T_k(s) = cos(k arccos s)."""
    if k < 0:
        raise ParameterError(f"degree must be >= 0, got {k}")
    return math.cos(k * math.acos(_clamp(s)))


def spherical_factor(d: int, k: int, s: float) -> float:
    """Addition-formula factor: sum of products of degree-k harmonics at angle cos = s.

    Equals harmonic_dim(k, d) at s = 1.
    """
    if d < 2:
        raise ParameterError(f"spherical_factor requires d >= 2, got {d}")
    if d == 2:
        return 1.0 if k == 0 else 2.0 * chebyshev_eval(k, s)
    delta = (d - 2) / 2.0
    return (k + delta) / delta * gegenbauer_eval(delta, k, s)


def spherical_factor_sequence(d: int, kmax: int, s: float) -> np.ndarray:
    """spherical_factor(d, k, s) for all k = 0..kmax in one recurrence pass."""
    if d < 2:
        raise ParameterError(f"spherical_factor_sequence requires d >= 2, got {d}")
    if kmax < 0:
        raise ParameterError(f"kmax must be >= 0, got {kmax}")
    out = np.empty(kmax + 1)
    if d == 2:
        theta = math.acos(_clamp(s))
        out[:] = 2.0 * np.cos(theta * np.arange(kmax + 1))
        out[0] = 1.0
        return out
    delta = (d - 2) / 2.0
    prev, cur = 1.0, 2.0 * delta * s
    out[0] = 1.0
    for k in range(1, kmax + 1):
        out[k] = (k + delta) / delta * cur
        prev, cur = cur, (2.0 * (k + 1 + delta - 1.0) * s * cur
                          - (k + 1 + 2.0 * delta - 2.0) * prev) / (k + 1)
    return out


def _clamp(s: float) -> float:
    # dot products of unit vectors can overshoot [-1, 1] by rounding
    return min(1.0, max(-1.0, s))
