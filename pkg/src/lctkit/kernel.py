"""Integral kernels and degenerate (b = 0) actions of linear canonical transforms."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .algebra import HopfAngles, Sl2cMatrix
from .errors import DegenerateMatrix, NearDegenerate, NotDegenerate
from .signals import GaussianChirp, lct_constant
from .special import principal_sqrt

# |b| below this rejects quadrature; for F_theta and V this is |sin| of the angle
NEAR_DEGENERATE_B = 0.05


@dataclass(frozen=True)
class KernelSpec:
    """Kernel constant * exp(pi i/b (a x^2 + d u^2)) * exp(-2 pi i x u / b).

    Named transforms always carry their own ``constant``; ``lct`` builds
    the plain sqrt(1/(i b)) normalisation for raw matrices.
    """

    matrix: Sl2cMatrix
    constant: complex

    def __post_init__(self):
        if self.matrix.b == 0:
            raise DegenerateMatrix("kernel needs matrix entry b != 0")
        object.__setattr__(self, "constant", complex(self.constant))

    @classmethod
    def lct(cls, matrix: Sl2cMatrix) -> KernelSpec:
        if matrix.b == 0:
            raise DegenerateMatrix("kernel needs matrix entry b != 0")
        return cls(matrix, lct_constant(matrix))

    @property
    def in_chirp(self) -> complex:
        """gamma in exp(gamma x^2), the x-side chirp of the kernel."""
        return np.pi * 1j * self.matrix.a / self.matrix.b

    @property
    def out_chirp(self) -> complex:
        return np.pi * 1j * self.matrix.d / self.matrix.b

    @property
    def cross(self) -> complex:
        """kappa in exp(kappa x u)."""
        return -2 * np.pi * 1j / self.matrix.b

    def require_quadrature_safe(self):
        if abs(self.matrix.b) < NEAR_DEGENERATE_B:
            raise NearDegenerate(
                f"|b| = {abs(self.matrix.b):.3g} < {NEAR_DEGENERATE_B}; "
                "kernel oscillates too fast for quadrature"
            )


@dataclass(frozen=True)
class DegenerateAction:
    """u -> prefactor * exp(chirp u^2) * f(scale u)."""

    scale: complex
    prefactor: complex = 1.0
    chirp: complex = 0.0

    def __post_init__(self):
        for name in ("scale", "prefactor", "chirp"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def is_real_scale(self) -> bool:
        return self.scale.imag == 0.0

    def apply_chirp(self, f: GaussianChirp) -> GaussianChirp:
        """Exact action on a Gaussian chirp."""
        return f.dilated(self.scale).chirped(self.chirp).scaled(self.prefactor)


IDENTITY = DegenerateAction(1.0)
PARITY = DegenerateAction(-1.0)


def lct_kernel(spec: KernelSpec, x, u):
    x = np.asarray(x, dtype=complex)
    u = np.asarray(u, dtype=complex)
    m = spec.matrix
    phase = np.pi * 1j / m.b * (m.a * x * x + m.d * u * u) - 2 * np.pi * 1j / m.b * x * u
    return (spec.constant * np.exp(phase))[()]


def degenerate_action(m: Sl2cMatrix | HopfAngles) -> DegenerateAction:
    """Exact action for b == 0 (raw LCT) or sin(eta) == 0 (Hopf angles).

    Raw matrices get sqrt(d) exp(pi i c d u^2) f(d u).  Versor angles get
    the bare scaling f(u e^{-i xi1} cos eta); the Versor family drops the
    sqrt(d) factor so that it reduces to I_theta.
    """
    if isinstance(m, HopfAngles):
        if abs(np.sin(m.eta)) > 1e-15:
            raise NotDegenerate("sin(eta) != 0")
        return DegenerateAction(cmath.exp(-1j * m.xi1) * round(np.cos(m.eta)))
    if m.b != 0:
        raise NotDegenerate("matrix entry b != 0")
    return DegenerateAction(m.d, principal_sqrt(m.d), np.pi * 1j * m.c * m.d)


def convergence_check(spec: KernelSpec, sigma: complex) -> bool:
    """True when the transform integral of a chirp with width ``sigma`` converges.

    Only Re(sigma - i a/b) > 0 is required; growing outputs are allowed.
    """
    m = spec.matrix
    return (complex(sigma) - 1j * m.a / m.b).real > 0
