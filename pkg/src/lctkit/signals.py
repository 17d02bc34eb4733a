"""Gaussian chirp signals and their exact linear canonical transforms.

A Gaussian chirp is f(x) = A exp(-pi sigma x^2 + beta x) with complex A,
sigma, beta.  Every LCT of a chirp is again a chirp, which gives exact
oracles for the quadrature engine.  ``PolyChirp`` (polynomial times chirp)
covers derivatives and moments of chirps.
"""
from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .algebra import Sl2cMatrix
from .errors import NonConvergent
from .special import gaussian_integral, principal_sqrt


@dataclass(frozen=True)
class GaussianChirp:
    """f(x) = amp * exp(-pi*sigma*x**2 + beta*x).

    ``sigma`` may have a non-positive real part (e.g. the Laplace-type
    image of a Gaussian grows like exp(+pi u^2)); such chirps can be
    evaluated but not integrated on their own.  See ``is_integrable``.
    """

    amp: complex = 1.0
    sigma: complex = 1.0
    beta: complex = 0.0

    def __post_init__(self):
        for name in ("amp", "sigma", "beta"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"chirp parameter {name} is not finite: {v}")
            object.__setattr__(self, name, v)

    def __call__(self, x):
        return eval_chirp(self, x)

    @property
    def is_integrable(self) -> bool:
        return self.sigma.real > 0

    def scaled(self, k: complex) -> GaussianChirp:
        return GaussianChirp(self.amp * k, self.sigma, self.beta)

    def shifted(self, x0: complex) -> GaussianChirp:
        """x -> f(x - x0)."""
        s, b = self.sigma, self.beta
        return GaussianChirp(
            self.amp * cmath.exp(-math.pi * s * x0 * x0 - b * x0),
            s,
            b + 2 * math.pi * s * x0,
        )

    def modulated(self, alpha: complex) -> GaussianChirp:
        """x -> exp(alpha x) f(x)."""
        return GaussianChirp(self.amp, self.sigma, self.beta + alpha)

    def chirped(self, gamma: complex) -> GaussianChirp:
        """x -> exp(gamma x^2) f(x)."""
        return GaussianChirp(self.amp, self.sigma - gamma / math.pi, self.beta)

    def dilated(self, s: complex) -> GaussianChirp:
        """x -> f(s x)."""
        return GaussianChirp(self.amp, self.sigma * s * s, self.beta * s)

    def conj(self) -> GaussianChirp:
        """x -> conj(f(x)) for real x."""
        return GaussianChirp(self.amp.conjugate(), self.sigma.conjugate(), self.beta.conjugate())

    def reflected(self) -> GaussianChirp:
        """x -> f(-x)."""
        return GaussianChirp(self.amp, self.sigma, -self.beta)

    def __mul__(self, other: GaussianChirp) -> GaussianChirp:
        return GaussianChirp(
            self.amp * other.amp, self.sigma + other.sigma, self.beta + other.beta
        )

    def as_poly(self) -> PolyChirp:
        return PolyChirp(np.array([1.0 + 0j]), self)

    def derivative(self, n: int = 1) -> PolyChirp:
        return self.as_poly().derivative(n)

    def moment(self, k: int) -> PolyChirp:
        """x -> x^k f(x)."""
        return self.as_poly().times_power(k)

    def to_json(self) -> dict:
        return {
            "amp": [self.amp.real, self.amp.imag],
            "sigma": [self.sigma.real, self.sigma.imag],
            "beta": [self.beta.real, self.beta.imag],
        }

    @classmethod
    def from_json(cls, obj) -> GaussianChirp:
        if isinstance(obj, str):
            obj = json.loads(obj)

        def cx(key, default):
            v = obj.get(key, default)
            if isinstance(v, (list, tuple)):
                if len(v) != 2:
                    raise ValueError(f"{key} must be a [re, im] pair")
                return complex(float(v[0]), float(v[1]))
            return complex(v)

        return cls(cx("amp", [1, 0]), cx("sigma", [1, 0]), cx("beta", [0, 0]))


@dataclass(frozen=True)
class PolyChirp:
    """poly(x) * chirp(x), polynomial coefficients in ascending order."""

    coeffs: np.ndarray
    chirp: GaussianChirp

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.atleast_1d(np.asarray(self.coeffs, dtype=complex)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def sigma(self) -> complex:
        return self.chirp.sigma

    @property
    def beta(self) -> complex:
        return self.chirp.beta

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        return P.polyval(x, self.coeffs) * self.chirp(x)

    def derivative(self, n: int = 1) -> PolyChirp:
        # d/dx [p e^phi] = (p' + p phi') e^phi, phi' = -2 pi sigma x + beta
        dphi = np.array([self.chirp.beta, -2 * math.pi * self.chirp.sigma])
        c = self.coeffs
        for _ in range(n):
            c = P.polyadd(P.polyder(c), P.polymul(c, dphi))
        return PolyChirp(c, self.chirp)

    def times_poly(self, coeffs) -> PolyChirp:
        return PolyChirp(P.polymul(self.coeffs, np.asarray(coeffs, dtype=complex)), self.chirp)

    def times_power(self, k: int) -> PolyChirp:
        c = self.coeffs
        for _ in range(k):
            c = P.polymulx(c)
        return PolyChirp(c, self.chirp)

    def scaled(self, k: complex) -> PolyChirp:
        return PolyChirp(self.coeffs * k, self.chirp)

    def __add__(self, other: PolyChirp) -> PolyChirp:
        if other.chirp != self.chirp:
            raise ValueError("can only add PolyChirps sharing the same chirp")
        return PolyChirp(P.polyadd(self.coeffs, other.coeffs), self.chirp)


@dataclass(frozen=True)
class SampledSignal:
    x0: float
    dx: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex).ravel()
        if not self.dx > 0:
            raise ValueError("grid spacing dx must be positive")
        if vals.size == 0:
            raise ValueError("a sampled signal needs at least one sample")
        if not np.all(np.isfinite(vals)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "dx", float(self.dx))
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return self.values.size

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.values.size)

    def to_csv(self, label: str = "x") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([label, "re", "im"])
        for x, v in zip(self.grid, self.values):
            w.writerow([f"{x:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> SampledSignal:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [h.strip() for h in rows[0][1:]] != ["re", "im"]:
            raise ValueError("CSV header must be 'x,re,im' (or 'u,re,im')")
        data = np.array([[float(t) for t in r] for r in rows[1:] if r], dtype=float)
        if data.ndim != 2 or data.shape[0] == 0 or data.shape[1] != 3:
            raise ValueError("CSV needs at least one row of three numbers")
        x = data[:, 0]
        dx = float(x[1] - x[0]) if len(x) > 1 else 1.0
        if len(x) > 1 and not np.allclose(np.diff(x), dx, rtol=1e-9, atol=1e-12):
            raise ValueError("CSV abscissae must be uniformly spaced")
        return cls(x[0], dx, data[:, 1] + 1j * data[:, 2])


def eval_chirp(f: GaussianChirp, x):
    x = np.asarray(x, dtype=complex)
    return (f.amp * np.exp(-np.pi * f.sigma * x * x + f.beta * x))[()]


def sample(f, x0: float, dx: float, n: int) -> SampledSignal:
    if n < 1:
        raise ValueError("n must be at least 1")
    x = x0 + dx * np.arange(n)
    return SampledSignal(x0, dx, f(x))


def lct_constant(m: Sl2cMatrix) -> complex:
    """Default LCT normalisation sqrt(1/(i b))."""
    return principal_sqrt(1 / (1j * m.b))


def closed_form_lct(m: Sl2cMatrix, f: GaussianChirp, constant: complex | None = None) -> GaussianChirp:
    """Exact image of a Gaussian chirp under the LCT with matrix ``m``.

    ``constant`` replaces the default sqrt(1/(i b)) normalisation.  For
    b == 0 the multiplier branch sqrt(d) exp(pi i c d u^2) f(d u) is used,
    with ``constant`` replacing sqrt(d) when given.

    Raises NonConvergent when Re(sigma - i a/b) <= 0.  The output may have
    Re(sigma') <= 0 (a growing chirp); whether it can be transformed again
    is decided by the next transform's own convergence condition.
    """
    if m.b == 0:
        pref = principal_sqrt(m.d) if constant is None else constant
        g = f.dilated(m.d).chirped(np.pi * 1j * m.c * m.d)
        return g.scaled(pref)
    if constant is None:
        constant = lct_constant(m)
    s = f.sigma - 1j * m.a / m.b
    if not s.real > 0:
        raise NonConvergent(f"Re(sigma - i a/b) = {s.real:.6g} <= 0")
    amp = constant * f.amp * gaussian_integral(np.pi * s, f.beta)
    sigma = -1j * m.d / m.b + 1 / (m.b * m.b * s)
    beta = -1j * f.beta / (m.b * s)
    return GaussianChirp(amp, sigma, beta)


def convolve_chirps(f: GaussianChirp, g: GaussianChirp) -> GaussianChirp:
    """(f * g)(x) = integral f(t) g(x - t) dt, in closed form."""
    ssum = f.sigma + g.sigma
    if not ssum.real > 0:
        raise NonConvergent("convolution integrand does not decay")
    q0 = f.beta - g.beta
    amp = f.amp * g.amp * gaussian_integral(np.pi * ssum, q0)
    return GaussianChirp(amp, f.sigma * g.sigma / ssum, (f.beta * g.sigma + g.beta * f.sigma) / ssum)


def correlate_chirps(f: GaussianChirp, g: GaussianChirp) -> GaussianChirp:
    """(f ⋆ g)(x) = integral conj(f(t)) g(x + t) dt, in closed form."""
    return convolve_chirps(f.conj().reflected(), g)
