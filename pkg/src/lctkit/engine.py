"""Quadrature engine: applies LCT kernels to chirps and to sampled signals.

Analytic inputs (Gaussian chirps, possibly times a polynomial) are
integrated with a composite trapezoid rule along the horizontal line
through the integrand's saddle point, on a window around its envelope
peak.  For Gaussian-type integrands the trapezoid
rule converges geometrically, so the node spacing is picked from the
aliasing bound of the integrand's spectrum and from a samples-per-cycle
rule, whichever is finer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import ComplexScaleOnSamples, NodeBudgetExceeded, NonConvergent
from .kernel import DegenerateAction, KernelSpec, lct_kernel
from .signals import GaussianChirp, PolyChirp, SampledSignal


@dataclass(frozen=True)
class QuadratureConfig:
    env_tol: float = 1e-12
    oversample: float = 8.0
    max_nodes: int = 2**20

    def __post_init__(self):
        if not 0 < self.env_tol < 1:
            raise ValueError("env_tol must lie in (0, 1)")
        if not self.oversample >= 2:
            raise ValueError("oversample must be >= 2")
        if not self.max_nodes >= 16:
            raise ValueError("max_nodes must be >= 16")


DEFAULT_CONFIG = QuadratureConfig()


def grid_points(u0: float, du: float, n: int) -> np.ndarray:
    return u0 + du * np.arange(n)


def trapezoid_plan(p: complex, q: complex, degree: int, cfg: QuadratureConfig, log_tol: float | None = None):
    """Window centre, half-width and node count for integral exp(-p x^2 + q x) * poly.

    The envelope exp(-Re p x^2 + Re q x) peaks at xc = Re q / (2 Re p); the
    window [xc - R, xc + R] drops it to ``env_tol`` times the peak, with
    room for polynomial growth of the given degree.
    """
    pr = p.real
    if not pr > 0:
        raise NonConvergent(f"integrand exponent has Re(p) = {pr:.6g} <= 0")
    xc = q.real / (2 * pr)
    if log_tol is None:
        log_tol = -math.log(cfg.env_tol)
    r = math.sqrt(log_tol / pr)
    for _ in range(4):
        r = math.sqrt((log_tol + degree * math.log1p(abs(xc) + r)) / pr)

    # aliasing: |ghat(k)| / |ghat(0)| = exp(k/2 Im(q/p) - k^2/4 Re(1/p)) <= tol
    inv = (1 / p).real / 4
    lin = abs((q / p).imag) / 2
    log_t = log_tol + degree * math.log1p(abs(xc) + r)
    k_alias = (lin + math.sqrt(lin * lin + 4 * inv * log_t)) / (2 * inv)
    h = 2 * math.pi / k_alias

    # samples per cycle of the fastest phase rotation inside the window
    w_max = max(abs(-2 * p.imag * x + q.imag) for x in (xc - r, xc + r))
    if w_max > 0:
        h = min(h, 2 * math.pi / (cfg.oversample * w_max))
    n = int(math.ceil(2 * r / h)) + 1
    n += 1 - n % 2
    if n > cfg.max_nodes:
        raise NodeBudgetExceeded(f"quadrature needs {n} nodes > max_nodes = {cfg.max_nodes}")
    return xc, r, max(n, 17)


def _as_polychirp(f) -> PolyChirp:
    if isinstance(f, GaussianChirp):
        return f.as_poly()
    if isinstance(f, PolyChirp):
        return f
    raise TypeError(f"expected GaussianChirp or PolyChirp, got {type(f).__name__}")


def transform_points(spec: KernelSpec, f, u, cfg: QuadratureConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Evaluate the transform of an analytic signal at points ``u`` (complex allowed)."""
    spec.require_quadrature_safe()
    g = _as_polychirp(f)
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    p = np.pi * g.sigma - spec.in_chirp
    if not p.real > 0:
        raise NonConvergent(
            f"Re(sigma - i a/b) = {p.real / np.pi:.6g} <= 0: transform integral diverges"
        )
    out = np.empty(u.shape, dtype=complex)
    for j, uj in enumerate(u.flat):
        out.flat[j] = _integrate(spec, g, p, g.beta + spec.cross * uj, uj, cfg)
    return out


def saddle_shift(p: complex, q: complex) -> float:
    """Imaginary offset of the line through the saddle point q / (2p).

    The integrand poly(x) exp(-p x^2 + q x) is entire and decays in every
    horizontal strip when Re p > 0, so the real line may be moved to
    Im x = y0 without changing the integral.  On the line through the
    saddle the envelope peak equals the size of the result, which removes
    the cancellation between a large real-line peak and a small value.
    """
    return (q / (2 * p)).imag


def _shifted_trapezoid(p, q, coeffs, pref, cfg, log_tol=None):
    """pref * integral of poly(x) exp(-p x^2 + q x) over the real line."""
    degree = len(coeffs) - 1
    y0 = saddle_shift(p, q)
    # on x = t + i y0 the exponent is -p t^2 + (q - 2 i p y0) t + const
    q_line = q - 2j * p * y0
    if log_tol is None:
        log_tol = -math.log(cfg.env_tol)
    for _ in range(3):
        xc, r, n = trapezoid_plan(p, q_line, degree, cfg, log_tol)
        z = np.linspace(xc - r, xc + r, n) + 1j * y0
        h = 2 * r / (n - 1)
        # one exponent for kernel times chirp: the factors can overflow separately
        y = pref * P.polyval(z, coeffs) * np.exp(-p * z * z + q * z)
        val = h * (np.sum(y[1:-1]) + 0.5 * (y[0] + y[-1]))
        # Gaussian tail beyond the window, relative to the value itself
        tail = (abs(y[0]) + abs(y[-1])) / (2 * p.real * r)
        target = cfg.env_tol * abs(val)
        if tail <= target or target == 0.0:
            break
        log_tol = min(log_tol + math.log(tail / target) + 1.0, 700.0)
    return val


def _integrate(spec: KernelSpec, g: PolyChirp, p: complex, q: complex, u: complex, cfg: QuadratureConfig) -> complex:
    pref = spec.constant * g.chirp.amp * np.exp(spec.out_chirp * u * u)
    return _shifted_trapezoid(p, q, g.coeffs, pref, cfg)


def integrate_real_line(f, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """Trapezoid integral of a chirp (or polynomial times chirp) over the real line."""
    g = _as_polychirp(f)
    return _shifted_trapezoid(np.pi * g.sigma, g.beta, g.coeffs, g.chirp.amp, cfg)


def transform_analytic(spec: KernelSpec, f, grid, cfg: QuadratureConfig = DEFAULT_CONFIG) -> SampledSignal:
    u0, du, n = grid
    return SampledSignal(u0, du, transform_points(spec, f, grid_points(u0, du, n), cfg))


def transform_sampled(spec: KernelSpec, s: SampledSignal, u) -> np.ndarray:
    """Kernel-matrix product out[j] = sum_i K(x_i, u_j) s_i w_i dx.

    Trapezoid end weights are 1/2.  The samples must cover the support of
    the signal; nothing is extrapolated beyond them.
    """
    spec.require_quadrature_safe()
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    x = s.grid
    w = np.full(x.size, s.dx)
    if x.size > 1:
        w[0] = w[-1] = 0.5 * s.dx
    ws = w * s.values
    out = np.empty(u.size, dtype=complex)
    chunk = max(1, 2**22 // x.size)
    for start in range(0, u.size, chunk):
        uu = u[start:start + chunk]
        out[start:start + chunk] = lct_kernel(spec, x[None, :], uu[:, None]) @ ws
    return out


def apply_degenerate(act: DegenerateAction, f, u) -> np.ndarray:
    """prefactor * exp(chirp u^2) * f(scale u) at the points ``u``."""
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    pre = act.prefactor * np.exp(act.chirp * u * u)
    if isinstance(f, SampledSignal):
        if not act.is_real_scale:
            raise ComplexScaleOnSamples(
                f"scale {act.scale} is complex; samples cannot be evaluated off the real line"
            )
        if np.any(u.imag != 0):
            raise ComplexScaleOnSamples("output grid must be real for sampled input")
        t = (act.scale.real * u.real)
        x = f.grid
        vals = np.interp(t, x, f.values.real, left=0.0, right=0.0) + 1j * np.interp(
            t, x, f.values.imag, left=0.0, right=0.0
        )
        return pre * vals
    return pre * f(act.scale * u)
