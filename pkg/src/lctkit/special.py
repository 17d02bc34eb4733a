"""Special functions used by the transform identities.

The chirp-derivative function

    g_m(x) = exp(-c x^2) d^m/dx^m exp(c x^2)

is a degree-m polynomial in x.  It is produced here from the recurrence
g_{m+1} = g_m' + 2 c x g_m, which is the path every identity check uses.
The Hermite closed form is kept as an independent cross-check only.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import NonConvergent

MAX_CHIRP_ORDER = 32


def principal_sqrt(z: complex) -> complex:
    """Principal square root; -1 maps to +i."""
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        # cmath honours the sign of a zero imaginary part; pin the branch
        return complex(0.0, (-z.real) ** 0.5)
    return cmath.sqrt(z)


def hermite_prob(m: int, y):
    """Probabilists' Hermite polynomial He_m(y) by three-term recurrence."""
    if m < 0:
        raise ValueError("m must be non-negative")
    y = np.asarray(y, dtype=complex)
    prev, cur = np.ones_like(y), y
    if m == 0:
        return prev[()]
    for k in range(1, m):
        prev, cur = cur, y * cur - k * prev
    return cur[()]


def hermite_phys(m: int, y):
    """Physicists' Hermite polynomial H_m(y) by three-term recurrence."""
    if m < 0:
        raise ValueError("m must be non-negative")
    y = np.asarray(y, dtype=complex)
    prev, cur = np.ones_like(y), 2 * y
    if m == 0:
        return prev[()]
    for k in range(1, m):
        prev, cur = cur, 2 * y * cur - 2 * k * prev
    return cur[()]


@dataclass(frozen=True)
class ChirpDerivativeRequest:
    m: int
    c: complex
    x: complex

    def __post_init__(self):
        if not 0 <= self.m <= MAX_CHIRP_ORDER:
            raise ValueError(f"order m must lie in [0, {MAX_CHIRP_ORDER}], got {self.m}")


def chirp_derivative_coeffs(m: int, c: complex) -> np.ndarray:
    """Ascending power-series coefficients of g_m for exp(c x^2)."""
    coeffs = np.array([1.0 + 0j])
    for _ in range(m):
        coeffs = P.polyadd(P.polyder(coeffs), 2 * c * P.polymulx(coeffs))
    return coeffs


def chirp_derivative(req: ChirpDerivativeRequest) -> complex:
    return complex(P.polyval(req.x, chirp_derivative_coeffs(req.m, req.c)))


def chirp_derivative_hermite(m: int, c: complex, x):
    """Closed form (-1)^m (-2c)^{m/2} He_m(sqrt(-2c) x) of g_m.

    sqrt(-2c) and its m-th power share one principal branch, so the pair
    is consistent for every m.
    """
    s = principal_sqrt(-2 * c)
    return (-1) ** m * s**m * hermite_prob(m, s * np.asarray(x, dtype=complex))


def chirp_derivative_hermite_uncorrected(m: int, c: complex, x):
    """The unscaled form (-1)^m He_m(sqrt(-2c) x); wrong for m >= 1."""
    s = principal_sqrt(-2 * c)
    return (-1) ** m * hermite_prob(m, s * np.asarray(x, dtype=complex))


def gaussian_integral(p: complex, q: complex) -> complex:
    """Integral over the real line of exp(-p x^2 + q x) = sqrt(pi/p) exp(q^2/4p)."""
    p, q = complex(p), complex(q)
    if not p.real > 0:
        raise NonConvergent(f"Gaussian integral needs Re(p) > 0, got p = {p}")
    return principal_sqrt(np.pi / p) * cmath.exp(q * q / (4 * p))
