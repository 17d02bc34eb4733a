"""Numerical verification of the LCT / FrFT / Versor transform identities.

Each checker evaluates both sides of one identity with the quadrature
engine on a grid of output points and reports the residual

    sup |lhs - rhs| / max(sup |lhs|, sup |rhs|).

The scalar factors appearing in the identities are gathered in
``IdentityCoefficients``.  ``lct_coefficients`` derives them from the
matrix and the transform's normalisation constant; ``frft_coefficients``
and ``versor_coefficients`` spell out the same factors written directly in
terms of the angles, so the two can be compared.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .engine import DEFAULT_CONFIG, QuadratureConfig, integrate_real_line, trapezoid_plan
from .errors import InadmissibleAuxiliary, NonConvergent, NotDegenerate
from .kernel import convergence_check
from .signals import GaussianChirp, PolyChirp, convolve_chirps, correlate_chirps
from .special import chirp_derivative_coeffs, principal_sqrt
from .transforms import NamedTransform

PASS, FAIL, REPORT_ONLY = "Pass", "Fail", "ReportOnly"

IDENTITIES = (
    "shift-in",
    "shift-out",
    "deriv-in",
    "deriv-out",
    "parseval",
    "conv-time",
    "conv-freq",
    "corr-time",
    "corr-freq",
)

TOLERANCES = {
    "shift-in": 1e-5,
    "shift-out": 1e-5,
    "deriv-in": 1e-5,
    "deriv-out": 1e-5,
    "parseval": 1e-6,
    "conv-time": 1e-4,
    "conv-freq": 1e-4,
    "corr-time": 1e-4,
    "corr-freq": 1e-4,
}
DERIV3_TOL = 1e-4
MAX_DERIV_ORDER = 3


def tolerance(identity: str, order: int | None = None) -> float:
    if identity.startswith("deriv") and order is not None and order >= 3:
        return DERIV3_TOL
    return TOLERANCES[identity]


@dataclass(frozen=True)
class IdentityCoefficients:
    """Scalar factors of the identities for one transform.

    shift_in_*:  f(x - x0) -> exp(quad x0^2) exp(lin x0 u) T(u - arg x0)
    shift_out_*: T(u - u0) = exp(quad u0^2) exp(lin u u0) T{exp(mod x u0) f}(u)
    in_chirp / out_chirp: gamma of h(x) = exp(gamma x^2) / k(u)^{-1}
    moment: the factor (moment * x)^k of the output-derivative identity
    conv_* / corr_*: leading constants of the convolution and correlation
    identities (time side and frequency side).
    """

    shift_in_quad: complex
    shift_in_lin: complex
    shift_in_arg: complex
    shift_out_mod: complex
    shift_out_quad: complex
    shift_out_lin: complex
    in_chirp: complex
    out_chirp: complex
    moment: complex
    conv_time: complex
    conv_freq: complex
    corr_time: complex
    corr_freq: complex

    def max_difference(self, other: IdentityCoefficients, fields=None) -> float:
        a, b = asdict(self), asdict(other)
        keys = fields or a.keys()
        return max(abs(a[k] - b[k]) for k in keys)


def lct_coefficients(t: NamedTransform) -> IdentityCoefficients:
    """Factors of the general LCT identities, rescaled to ``t``'s constant.

    With T = r * LCT_M and r = constant / sqrt(1/(i b)), every identity
    constant picks up r (or conj(r) on the conjugated side).
    """
    if t.kernel is None:
        raise NotDegenerate(f"{t.label()} has b = 0; identities need b != 0")
    a, b, c, d = t.matrix.entries()
    pi_i = math.pi * 1j
    c_lct = principal_sqrt(1 / (1j * b))
    r = t.kernel.constant / c_lct
    freq = 1 / principal_sqrt(1 / (-1j * b))
    return IdentityCoefficients(
        shift_in_quad=-pi_i * a * c,
        shift_in_lin=2 * pi_i * c,
        shift_in_arg=a,
        shift_out_mod=2 * pi_i / b,
        shift_out_quad=pi_i * d / b,
        shift_out_lin=-2 * pi_i * d / b,
        in_chirp=pi_i * a / b,
        out_chirp=pi_i * d / b,
        moment=-2 * pi_i / b,
        conv_time=c_lct * r,
        conv_freq=freq * r,
        corr_time=(c_lct * r).conjugate(),
        corr_freq=(freq * r).conjugate(),
    )


def frft_coefficients(theta: float) -> IdentityCoefficients:
    """Identity factors written directly in terms of the FrFT angle."""
    pi_i = math.pi * 1j
    cos, sin = math.cos(theta), math.sin(theta)
    cot, csc = cos / sin, 1 / sin
    return IdentityCoefficients(
        shift_in_quad=pi_i * cos * sin,
        shift_in_lin=-2 * pi_i * sin,
        shift_in_arg=cos,
        shift_out_mod=2 * pi_i * csc,
        shift_out_quad=pi_i * cot,
        shift_out_lin=-2 * pi_i * cot,
        in_chirp=pi_i * cot,
        out_chirp=pi_i * cot,
        moment=-2 * pi_i * csc,
        conv_time=principal_sqrt(1 - 1j * cot),
        conv_freq=1 / principal_sqrt(1 + 1j * cot),
        corr_time=principal_sqrt(1 - 1j * cot).conjugate(),
        corr_freq=1 / principal_sqrt(1 + 1j * cot).conjugate(),
    )


def versor_coefficients(xi1: float, eta: float, xi2: float) -> IdentityCoefficients:
    """Identity factors written directly in terms of the Hopf angles.

    The frequency-side convolution and correlation constants use
    sqrt(1 + i e^{-i xi2} cot eta); these agree with ``lct_coefficients``
    only when xi2 is a multiple of pi.
    """
    pi_i = math.pi * 1j
    e1, e2 = np.exp(1j * xi1), np.exp(-1j * xi2)
    cos, sin = math.cos(eta), math.sin(eta)
    cot, csc = cos / sin, 1 / sin
    return IdentityCoefficients(
        shift_in_quad=pi_i * e1 * e2 * cos * sin,
        shift_in_lin=-2 * pi_i * e2 * sin,
        shift_in_arg=e1 * cos,
        shift_out_mod=2 * pi_i * e2 * csc,
        shift_out_quad=pi_i * e2 / e1 * cot,
        shift_out_lin=-2 * pi_i * e2 / e1 * cot,
        in_chirp=pi_i * e1 * e2 * cot,
        out_chirp=pi_i * e2 / e1 * cot,
        moment=-2 * pi_i * e2 * csc,
        conv_time=principal_sqrt(1 - 1j * e2 * cot),
        conv_freq=1 / principal_sqrt(1 + 1j * e2 * cot),
        corr_time=principal_sqrt(1 - 1j * e2 * cot).conjugate(),
        corr_freq=1 / principal_sqrt(1 + 1j * e2 * cot).conjugate(),
    )


def angle_coefficients(t: NamedTransform) -> IdentityCoefficients:
    """Angle-specialised factors for FrFT/Versor families, LCT factors otherwise."""
    if t.kernel is None:
        raise NotDegenerate(f"{t.label()} has b = 0; identities need b != 0")
    if t.kind == "frft":
        return frft_coefficients(t.params[0])
    if t.kind == "versor":
        return versor_coefficients(*t.params)
    if t.kind == "frac_laplace":
        return versor_coefficients(0.0, t.params[0], math.pi / 2)
    if t.kind == "hybrid":
        return versor_coefficients(0.0, math.pi / 2, t.params[0])
    return lct_coefficients(t)


def coefficients(t: NamedTransform, formulas: str = "lct") -> IdentityCoefficients:
    if formulas == "lct":
        return lct_coefficients(t)
    if formulas == "angles":
        return angle_coefficients(t)
    raise ValueError(f"formulas must be 'lct' or 'angles', got {formulas!r}")


@dataclass
class IdentityReport:
    identity: str
    params: dict
    lhs_norm: float
    rhs_norm: float
    residual: float | None
    tolerance: float
    verdict: str
    note: str | None = None
    lhs: np.ndarray | None = field(default=None, repr=False)
    rhs: np.ndarray | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "lhs_norm": _finite_or_none(self.lhs_norm),
            "rhs_norm": _finite_or_none(self.rhs_norm),
        }
        if self.note:
            out["note"] = self.note
        return out


def _finite_or_none(v):
    return v if v is not None and math.isfinite(v) else None


def residual(lhs, rhs) -> float:
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(np.max(np.abs(lhs)), np.max(np.abs(rhs)))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(lhs - rhs)) / scale)


def _report(identity, params, lhs, rhs, tol, gated=True, note=None) -> IdentityReport:
    res = residual(lhs, rhs)
    if not gated:
        verdict = REPORT_ONLY
    else:
        verdict = PASS if res <= tol else FAIL
    return IdentityReport(
        identity,
        params,
        float(np.max(np.abs(lhs))),
        float(np.max(np.abs(rhs))),
        res,
        tol,
        verdict,
        note,
        np.asarray(lhs),
        np.asarray(rhs),
    )


def _base_params(t: NamedTransform, **extra) -> dict:
    out = {"transform": t.to_json()}
    for k, v in extra.items():
        out[k] = v.to_json() if isinstance(v, GaussianChirp) else v
    return out


def _require_convergent(t: NamedTransform, *fs: GaussianChirp):
    if t.kernel is None:
        raise NotDegenerate(f"{t.label()} has b = 0; identities need b != 0")
    t.kernel.require_quadrature_safe()
    for f in fs:
        if not convergence_check(t.kernel, f.sigma):
            raise NonConvergent(f"{t.label()} of chirp with sigma = {f.sigma} diverges")


def default_grid(t: NamedTransform, f: GaussianChirp, n: int = 41) -> np.ndarray:
    """Real output grid spanning +-4 standard deviations of |T f|^2.

    Growing (Laplace-type) images get the fixed window [-1, 1].
    """
    out = t.oracle(f)
    s = out.sigma.real
    if s <= 0:
        return np.linspace(-1.0, 1.0, n)
    centre = out.beta.real / (2 * math.pi * s)
    half = 4 / math.sqrt(2 * math.pi * s)
    return np.linspace(centre - half, centre + half, n)


def check_shift_input(t, f, x0, u=None, cfg=DEFAULT_CONFIG, formulas="lct") -> IdentityReport:
    """T{f(x - x0)}(u) = exp(quad x0^2) exp(lin x0 u) T{f}(u - a x0)."""
    _require_convergent(t, f)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    lhs = t.quadrature(f.shifted(x0), u, cfg)
    rhs = (
        np.exp(k.shift_in_quad * x0 * x0 + k.shift_in_lin * x0 * u)
        * t.quadrature(f, u - k.shift_in_arg * x0, cfg)
    )
    return _report("shift-in", _base_params(t, f=f, x0=x0), lhs, rhs, tolerance("shift-in"))


def check_shift_output(t, f, u0, u=None, cfg=DEFAULT_CONFIG, formulas="lct") -> IdentityReport:
    """exp(quad u0^2) exp(lin u u0) T{exp(mod x u0) f}(u) = T{f}(u - u0)."""
    _require_convergent(t, f)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    lhs = np.exp(k.shift_out_quad * u0 * u0 + k.shift_out_lin * u * u0) * t.quadrature(
        f.modulated(k.shift_out_mod * u0), u, cfg
    )
    rhs = t.quadrature(f, u - u0, cfg)
    return _report("shift-out", _base_params(t, f=f, u0=u0), lhs, rhs, tolerance("shift-out"))


def check_derivative_input(t, f, n, u=None, cfg=DEFAULT_CONFIG, formulas="lct") -> IdentityReport:
    """T{f^(n)}(u) = (-1)^n sum_k (moment u)^k C(n,k) T{g_{n-k} f}(u).

    g_m(x) = exp(-gamma x^2) d^m/dx^m exp(gamma x^2) with gamma = in_chirp,
    taken from the chirp-derivative recurrence.
    """
    if not 0 <= n <= MAX_DERIV_ORDER:
        raise ValueError(f"derivative order must lie in [0, {MAX_DERIV_ORDER}]")
    _require_convergent(t, f)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    lhs = t.quadrature(f.derivative(n), u, cfg)
    rhs = np.zeros(u.shape, dtype=complex)
    for j in range(n + 1):
        g = PolyChirp(chirp_derivative_coeffs(n - j, k.in_chirp), f)
        rhs += (k.moment * u) ** j * comb(n, j) * t.quadrature(g, u, cfg)
    rhs *= (-1) ** n
    return _report("deriv-in", _base_params(t, f=f, n=n), lhs, rhs, tolerance("deriv-in", n))


def _fd_derivative(func, u, n, h):
    """4th-order central difference of order n (n <= 3)."""
    stencils = {
        1: ({-2: 1, -1: -8, 1: 8, 2: -1}, 12.0),
        2: ({-2: -1, -1: 16, 0: -30, 1: 16, 2: -1}, 12.0),
        3: ({-3: 1, -2: -8, -1: 13, 1: -13, 2: 8, 3: -1}, 8.0),
    }
    weights, denom = stencils[n]
    acc = np.zeros(np.shape(u), dtype=complex)
    for off, w in weights.items():
        acc += w * func(u + off * h)
    return acc / (denom * h**n)


def check_derivative_output(
    t, f, n, u=None, cfg=DEFAULT_CONFIG, formulas="lct", method="oracle", h=1e-2
) -> IdentityReport:
    """sum_k C(n,k) g_{n-k}(u) T{(moment x)^k f}(u) = d^n/du^n T{f}(u).

    The right side is the symbolic derivative of the closed-form image
    (``method="oracle"``) or a 4th-order finite difference of the engine
    output (``method="fd"``).
    """
    if not 0 <= n <= MAX_DERIV_ORDER:
        raise ValueError(f"derivative order must lie in [0, {MAX_DERIV_ORDER}]")
    _require_convergent(t, f)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    lhs = np.zeros(u.shape, dtype=complex)
    for j in range(n + 1):
        g_poly = chirp_derivative_coeffs(n - j, k.out_chirp)
        weight = np.polynomial.polynomial.polyval(u, g_poly)
        lhs += comb(n, j) * weight * t.quadrature(f.moment(j).scaled(k.moment**j), u, cfg)
    if n == 0:
        rhs = t.quadrature(f, u, cfg)
    elif method == "oracle":
        rhs = t.oracle(f).derivative(n)(u)
    elif method == "fd":
        rhs = _fd_derivative(lambda v: t.quadrature(f, v, cfg), u, n, h)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _report(
        "deriv-out", _base_params(t, f=f, n=n, method=method), lhs, rhs, tolerance("deriv-out", n)
    )


def _real_line_nodes(plans):
    """Union grid covering several (centre, half-width, count) trapezoid plans."""
    lo = min(c - r for c, r, _ in plans)
    hi = max(c + r for c, r, _ in plans)
    step = min(2 * r / (n - 1) for _, r, n in plans)
    n = int(math.ceil((hi - lo) / step)) + 1
    return np.linspace(lo, hi, n)


def _trapezoid(y, x, axis=-1):
    return np.trapezoid(y, x, axis=axis)


def check_parseval(t, f, g, cfg=DEFAULT_CONFIG) -> IdentityReport:
    """int f conj(g) dx = int T{f} conj(T{g}) du.

    Only real matrices are gated; complex matrices are measured and
    reported (verdict ReportOnly), with residual None when the right-hand
    integral diverges.
    """
    _require_convergent(t, f, g)
    gated = t.matrix.is_real()
    params = _base_params(t, f=f, g=g)
    tol = tolerance("parseval")
    lhs = integrate_real_line(f * g.conj(), cfg)
    prod = t.oracle(f) * t.oracle(g).conj()
    if not prod.sigma.real > 0:
        if gated:
            raise NonConvergent("output-side Parseval integral diverges")
        return IdentityReport(
            "parseval", params, abs(lhs), math.inf, None, tol, REPORT_ONLY,
            note="T{f} conj(T{g}) does not decay on the real line; integral diverges",
        )
    plan = trapezoid_plan(math.pi * prod.sigma, prod.beta, 0, cfg)
    v = _real_line_nodes([plan])
    rhs = _trapezoid(t.quadrature(f, v, cfg) * np.conj(t.quadrature(g, v, cfg)), v)
    return _report("parseval", params, np.array([lhs]), np.array([rhs]), tol, gated=gated)


def _require_integrable(name, chirp):
    if not chirp.sigma.real > 0:
        raise InadmissibleAuxiliary(f"auxiliary {name} has Re(sigma) = {chirp.sigma.real:.6g} <= 0")


def _output_side_convolution(t, f, g, u, k, cfg, correlate=False):
    """Numerical (F * G)(u) or (F ⋆ G)(u), F = T{f} k, G = T{g} k, on the real line.

    F and G come from the engine; the closed-form images are used only to
    size the integration grid.
    """
    fk = t.oracle(f).chirped(-k.out_chirp)
    gk = t.oracle(g).chirped(-k.out_chirp)
    _require_integrable("T{f} k", fk)
    _require_integrable("T{g} k", gk)
    sign = 1 if correlate else -1
    left = fk.conj() if correlate else fk
    # integrand in v: left(v) * G(u + sign v)
    ssum = left.sigma + gk.sigma
    plans = [
        trapezoid_plan(
            math.pi * ssum,
            left.beta + sign * gk.beta - sign * 2 * math.pi * gk.sigma * uj,
            0,
            cfg,
        )
        for uj in (np.min(u.real), np.max(u.real))
    ]
    v = _real_line_nodes(plans)
    kv = np.exp(-k.out_chirp * v * v)
    fv = t.quadrature(f, v, cfg) * kv
    if correlate:
        fv = np.conj(fv)
    w = u[:, None] + sign * v[None, :]
    gw = (t.quadrature(g, w.ravel(), cfg) * np.exp(-k.out_chirp * w.ravel() ** 2)).reshape(w.shape)
    return _trapezoid(fv[None, :] * gw, v, axis=1)


def check_convolution(t, f, g, direction="time", u=None, cfg=DEFAULT_CONFIG, formulas="lct") -> IdentityReport:
    """Convolution identities, time side or frequency side.

    time: conv_time exp(out_chirp u^2) T{h^{-1} [fh * gh]}(u) = T{f}(u) T{g}(u)
    freq: conv_freq exp(-out_chirp u^2) T{h f g}(u) = [T{f} k * T{g} k](u)
    with h(x) = exp(in_chirp x^2), k(u) = exp(-out_chirp u^2).
    """
    _require_convergent(t, f, g)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    name = "conv-" + direction
    params = _base_params(t, f=f, g=g, direction=direction)
    if direction == "time":
        fh, gh = f.chirped(k.in_chirp), g.chirped(k.in_chirp)
        _require_integrable("fh", fh)
        _require_integrable("gh", gh)
        aux = convolve_chirps(fh, gh).chirped(-k.in_chirp)
        lhs = k.conv_time * np.exp(k.out_chirp * u * u) * t.quadrature(aux, u, cfg)
        rhs = t.quadrature(f, u, cfg) * t.quadrature(g, u, cfg)
    elif direction == "freq":
        aux = (f * g).chirped(k.in_chirp)
        lhs = k.conv_freq * np.exp(-k.out_chirp * u * u) * t.quadrature(aux, u, cfg)
        rhs = _output_side_convolution(t, f, g, u, k, cfg)
    else:
        raise ValueError("direction must be 'time' or 'freq'")
    return _report(name, params, lhs, rhs, tolerance(name))


def check_crosscorrelation(t, f, g, direction="time", u=None, cfg=DEFAULT_CONFIG, formulas="lct") -> IdentityReport:
    """Cross-correlation identities, [f ⋆ g](x) = int conj(f(s)) g(x + s) ds.

    time: corr_time exp(-out_chirp u^2) T{h^{-1} [fh ⋆ gh]}(u) = conj(T{f}(u)) T{g}(u)
    freq: corr_freq exp(-out_chirp u^2) T{h^{-1} conj(f) g}(u) = [T{f} k ⋆ T{g} k](u)
    """
    _require_convergent(t, f, g)
    k = coefficients(t, formulas)
    u = default_grid(t, f) if u is None else np.asarray(u, dtype=complex)
    name = "corr-" + direction
    params = _base_params(t, f=f, g=g, direction=direction)
    if direction == "time":
        fh, gh = f.chirped(k.in_chirp), g.chirped(k.in_chirp)
        _require_integrable("fh", fh)
        _require_integrable("gh", gh)
        aux = correlate_chirps(fh, gh).chirped(-k.in_chirp)
        lhs = k.corr_time * np.exp(-k.out_chirp * u * u) * t.quadrature(aux, u, cfg)
        rhs = np.conj(t.quadrature(f, u, cfg)) * t.quadrature(g, u, cfg)
    elif direction == "freq":
        aux = (f.conj() * g).chirped(-k.in_chirp)
        lhs = k.corr_freq * np.exp(-k.out_chirp * u * u) * t.quadrature(aux, u, cfg)
        rhs = _output_side_convolution(t, f, g, u, k, cfg, correlate=True)
    else:
        raise ValueError("direction must be 'time' or 'freq'")
    return _report(name, params, lhs, rhs, tolerance(name))


# seeded random inputs: sigma in [0.5, 2] + i[-0.5, 0.5], |beta| <= 1,
# amp of modulus [0.5, 1.5]; redrawn until the transform converges
_NEEDS_DECAY = {"conv-freq", "corr-freq"}


def draw_chirp(rng: np.random.Generator) -> GaussianChirp:
    amp = rng.uniform(0.5, 1.5) * np.exp(1j * rng.uniform(-np.pi, np.pi))
    sigma = complex(rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5))
    beta = rng.uniform(0, 1) * np.exp(1j * rng.uniform(-np.pi, np.pi))
    return GaussianChirp(amp, sigma, beta)


def _admissible(t: NamedTransform, f: GaussianChirp, need_decay: bool) -> bool:
    if not convergence_check(t.kernel, f.sigma):
        return False
    if need_decay:
        k = lct_coefficients(t)
        return t.oracle(f).chirped(-k.out_chirp).sigma.real > 0
    return True


def draw_inputs(t: NamedTransform, identity: str, seed: int, tries: int = 200):
    """Deterministic (f, g, shift) for one identity; independent of other identities."""
    if t.kernel is None:
        raise NotDegenerate(f"{t.label()} has b = 0; identities need b != 0")
    t.kernel.require_quadrature_safe()
    rng = np.random.default_rng([seed, IDENTITIES.index(identity)])
    need = identity in _NEEDS_DECAY or (identity == "parseval" and t.matrix.is_real())
    picked = []
    for _ in range(tries):
        f = draw_chirp(rng)
        if _admissible(t, f, need):
            picked.append(f)
            if len(picked) == 2:
                return picked[0], picked[1], float(rng.uniform(-1, 1))
    raise InadmissibleAuxiliary(
        f"no admissible random chirp found for {identity} under {t.label()} after {tries} draws"
    )


def run_identity(
    identity: str,
    t: NamedTransform,
    seed: int = 0,
    order: int = 2,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    formulas: str = "lct",
) -> IdentityReport:
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    f, g, shift = draw_inputs(t, identity, seed)
    kw = {"cfg": cfg}
    if identity == "shift-in":
        return check_shift_input(t, f, shift, formulas=formulas, **kw)
    if identity == "shift-out":
        return check_shift_output(t, f, shift, formulas=formulas, **kw)
    if identity == "deriv-in":
        return check_derivative_input(t, f, order, formulas=formulas, **kw)
    if identity == "deriv-out":
        return check_derivative_output(t, f, order, formulas=formulas, **kw)
    if identity == "parseval":
        return check_parseval(t, f, g, **kw)
    kind, direction = identity.split("-")
    checker = check_convolution if kind == "conv" else check_crosscorrelation
    return checker(t, f, g, direction, formulas=formulas, **kw)


def run_suite(t: NamedTransform, identities=IDENTITIES, **kw) -> list[IdentityReport]:
    """Run several identity checks; reports come back in IDENTITIES order."""
    wanted = [name for name in IDENTITIES if name in set(identities)]
    return [run_identity(name, t, **kw) for name in wanted]
