"""Named transforms: FrFT, I/J/K families, the hybrid H_theta and the Versor transform.

Every named transform is a Versor transform V(xi1, eta, xi2) with

    matrix   [[e^{i xi1} cos eta,   e^{i xi2} sin eta],
              [-e^{-i xi2} sin eta, e^{-i xi1} cos eta]]
    constant sqrt(1 - i e^{-i xi2} cot eta)            (sin eta != 0)
    action   f(u e^{-i xi1} cos eta)                     (sin eta == 0)

F_theta = V(0, theta, 0), I_theta = V(theta, 0, .), K_theta = V(0, theta, pi/2)
and H_theta = V(., pi/2, theta).  Raw matrices use the plain LCT with
sqrt(1/(i b)), or sqrt(d) exp(pi i c d u^2) f(d u) when b == 0.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .algebra import ONE, HopfAngles, Sl2cMatrix, matrix_from_json, matrix_inverse, matrix_to_json
from .engine import DEFAULT_CONFIG, QuadratureConfig, apply_degenerate, transform_points, transform_sampled
from .kernel import DegenerateAction, KernelSpec, degenerate_action
from .signals import GaussianChirp, SampledSignal, closed_form_lct
from .special import principal_sqrt

SNAP_TOL = 1e-9

KINDS = ("raw", "frft", "scale_i", "frac_laplace", "hybrid", "versor", "basis")

_QUARTER_COS = (1.0, 0.0, -1.0, 0.0)
_QUARTER_SIN = (0.0, 1.0, 0.0, -1.0)


def snap_quarter(angle: float) -> int | None:
    """k if ``angle`` lies within SNAP_TOL of k*pi/2, else None."""
    k = round(angle / (math.pi / 2))
    if abs(angle - k * math.pi / 2) <= SNAP_TOL:
        return k
    return None


def _cos_sin(angle: float) -> tuple[float, float]:
    k = snap_quarter(angle)
    if k is not None:
        return _QUARTER_COS[k % 4], _QUARTER_SIN[k % 4]
    return math.cos(angle), math.sin(angle)


def _cis(angle: float) -> complex:
    c, s = _cos_sin(angle)
    return complex(c, s)


@dataclass(frozen=True)
class NamedTransform:
    kind: str
    params: tuple
    matrix: Sl2cMatrix
    kernel: KernelSpec | None = None
    action: DegenerateAction | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown transform kind {self.kind!r}")
        if (self.kernel is None) == (self.action is None):
            raise ValueError("exactly one of kernel / action must be set")

    @property
    def is_degenerate(self) -> bool:
        return self.action is not None

    def oracle(self, f: GaussianChirp) -> GaussianChirp:
        """Exact image of a chirp (closed form, no quadrature)."""
        if self.action is not None:
            return self.action.apply_chirp(f)
        return closed_form_lct(self.kernel.matrix, f, self.kernel.constant)

    def quadrature(self, f, u, cfg: QuadratureConfig = DEFAULT_CONFIG) -> np.ndarray:
        if self.action is not None:
            return apply_degenerate(self.action, f, u)
        return transform_points(self.kernel, f, u, cfg)

    def sampled(self, s: SampledSignal, u) -> np.ndarray:
        if self.action is not None:
            return apply_degenerate(self.action, s, u)
        return transform_sampled(self.kernel, s, u)

    def label(self) -> str:
        if self.kind == "versor":
            return "V({:.6g}, {:.6g}, {:.6g})".format(*self.params)
        if self.kind == "raw":
            return "LCT" + json.dumps(matrix_to_json(self.matrix))
        if self.kind == "basis":
            return self.params[0]
        names = {"frft": "F", "scale_i": "I", "frac_laplace": "K", "hybrid": "H"}
        return f"{names[self.kind]}_{self.params[0]:.6g}"

    def to_json(self) -> dict:
        if self.kind == "versor":
            xi1, eta, xi2 = self.params
            return {"kind": "versor", "xi1": xi1, "eta": eta, "xi2": xi2}
        if self.kind == "raw":
            return {"kind": "raw", "matrix": matrix_to_json(self.matrix)}
        if self.kind == "basis":
            return {"kind": "basis", "which": self.params[0]}
        return {"kind": self.kind, "theta": self.params[0]}


def _versor_parts(xi1: float, eta: float, xi2: float):
    c, s = _cos_sin(eta)
    e1, e2 = _cis(xi1), _cis(xi2)
    m = Sl2cMatrix(e1 * c, e2 * s, -e2.conjugate() * s, e1.conjugate() * c)
    if s == 0.0:
        return m, None, DegenerateAction(e1.conjugate() * c)
    w = e2.conjugate() * (c / s)
    return m, KernelSpec(m, principal_sqrt(1 - 1j * w)), None


def make_versor(angles: HopfAngles | tuple) -> NamedTransform:
    if not isinstance(angles, HopfAngles):
        angles = HopfAngles(*angles)
    m, kern, act = _versor_parts(angles.xi1, angles.eta, angles.xi2)
    return NamedTransform("versor", (angles.xi1, angles.eta, angles.xi2), m, kern, act)


def make_frft(theta: float) -> NamedTransform:
    """F_theta; identity at theta = 0 and parity at theta = pi (mod 2 pi)."""
    m, kern, act = _versor_parts(0.0, theta, 0.0)
    return NamedTransform("frft", (float(theta),), m, kern, act)


def make_scale_i(theta: float) -> NamedTransform:
    """I_theta: f(u) -> f(u e^{-i theta})."""
    m, kern, act = _versor_parts(theta, 0.0, 0.0)
    return NamedTransform("scale_i", (float(theta),), m, kern, act)


def make_frac_laplace(theta: float) -> NamedTransform:
    """K_theta, kernel sqrt(1 - cot) exp(pi cot (x^2 + u^2)) exp(-2 pi csc x u)."""
    m, kern, act = _versor_parts(0.0, theta, math.pi / 2)
    return NamedTransform("frac_laplace", (float(theta),), m, kern, act)


def make_hybrid(theta: float) -> NamedTransform:
    """H_theta = V(xi1, pi/2, theta); kernel exp(-2 pi i e^{-i theta} x u).

    cos(eta) = 0 removes xi1 from the kernel, so it is fixed to 0.
    """
    m, kern, act = _versor_parts(0.0, math.pi / 2, theta)
    return NamedTransform("hybrid", (float(theta),), m, kern, act)


def make_basis(which: str) -> NamedTransform:
    """The operators 1, P, I, J (Fourier), K (bilateral Laplace at 2 pi u)."""
    if which == "1":
        return NamedTransform("basis", ("1",), ONE, action=DegenerateAction(1.0))
    if which == "P":
        return NamedTransform("basis", ("P",), -ONE, action=DegenerateAction(-1.0))
    angles = {"I": (math.pi / 2, 0.0, 0.0), "J": (0.0, math.pi / 2, 0.0), "K": (0.0, math.pi / 2, math.pi / 2)}
    if which not in angles:
        raise ValueError(f"unknown basis operator {which!r}; expected one of 1, P, I, J, K")
    m, kern, act = _versor_parts(*angles[which])
    return NamedTransform("basis", (which,), m, kern, act)


def make_raw(m: Sl2cMatrix) -> NamedTransform:
    if m.b == 0:
        return NamedTransform("raw", (), m, action=degenerate_action(m))
    return NamedTransform("raw", (), m, kernel=KernelSpec.lct(m))


def invert(t: NamedTransform) -> NamedTransform:
    """F_theta -> F_{-theta}; V(xi1, eta, xi2) -> V(-xi1, -eta, xi2); raw M -> M^{-1}."""
    if t.kind == "frft":
        return make_frft(-t.params[0])
    if t.kind == "scale_i":
        return make_scale_i(-t.params[0])
    if t.kind == "frac_laplace":
        return make_frac_laplace(-t.params[0])
    if t.kind == "hybrid":
        # V(0, -pi/2, theta) has the same matrix and constant as H_{theta + pi}
        return make_hybrid(t.params[0] + math.pi)
    if t.kind == "versor":
        xi1, eta, xi2 = t.params
        return make_versor(HopfAngles(-xi1, -eta, xi2))
    if t.kind == "basis":
        which = t.params[0]
        if which in ("1", "P"):
            return t
        return {"I": make_scale_i, "J": make_frft, "K": make_frac_laplace}[which](-math.pi / 2)
    return make_raw(matrix_inverse(t.matrix))


def compose_matrices(t1: NamedTransform, t2: NamedTransform) -> Sl2cMatrix:
    """Matrix of t1∘t2 (t2 applied first); the scalar constant is not tracked."""
    return t1.matrix @ t2.matrix


_NAMED_KERNELS = {
    "J": (Sl2cMatrix(0, 1, -1, 0), 1),
    "J^-1": (Sl2cMatrix(0, -1, 1, 0), 1),
    "K": (Sl2cMatrix(0, 1j, 1j, 0), 1),
    "K^-1": (Sl2cMatrix(0, -1j, -1j, 0), 1),
}
_NAMED_ACTIONS = {1: "1", -1: "P", -1j: "I", 1j: "I^-1"}


def operator_label(t: NamedTransform, atol: float = 1e-12) -> str | None:
    """Name of the basis operator ``t`` equals exactly, if any.

    Kernel transforms must match both matrix and constant; actions must be
    pure scalings with unit prefactor and no chirp.
    """
    if t.action is not None:
        a = t.action
        if abs(a.prefactor - 1) > atol or abs(a.chirp) > atol:
            return None
        for scale, name in _NAMED_ACTIONS.items():
            if abs(a.scale - scale) <= atol:
                return name
        return None
    for name, (m, const) in _NAMED_KERNELS.items():
        if t.matrix.allclose(m, atol) and abs(t.kernel.constant - const) <= atol:
            return name
    return None


def from_json(obj) -> NamedTransform:
    """Build a transform from a descriptor such as {"kind": "frft", "theta": 1.0}."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj.get("kind")
    if kind == "versor":
        return make_versor(HopfAngles(obj["xi1"], obj["eta"], obj["xi2"]))
    if kind == "raw":
        m = matrix_from_json(obj["matrix"])
        if not m.is_unimodular(1e-9):
            raise ValueError(f"raw matrix has determinant {m.det()}, expected 1")
        return make_raw(m)
    if kind == "basis":
        return make_basis(str(obj["which"]))
    ctor = {
        "frft": make_frft,
        "scale_i": make_scale_i,
        "frac_laplace": make_frac_laplace,
        "hybrid": make_hybrid,
    }.get(kind)
    if ctor is None:
        raise ValueError(f"unknown transform kind {kind!r}")
    return ctor(float(obj["theta"]))
