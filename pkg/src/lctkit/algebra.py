"""Quaternions, Hopf angles and their 2x2 complex matrix representation.

A quaternion a + bi + cj + dk is represented by the matrix

    [[ a + bi,  c + di],
     [-c + di,  a - bi]]

whose determinant is a^2 + b^2 + c^2 + d^2.  Versors therefore map into
SL(2, C) and index linear canonical transforms.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

ATOL = 1e-12


@dataclass(frozen=True)
class Quaternion:
    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __mul__(self, other: Quaternion) -> Quaternion:
        return quat_mul(self, other)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def norm(self) -> float:
        return math.sqrt(self.a**2 + self.b**2 + self.c**2 + self.d**2)

    def is_versor(self, tol: float = ATOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class Sl2cMatrix:
    """2x2 complex matrix [[a, b], [c, d]].

    Unit determinant is expected but only checked on request
    (``is_unimodular``); ``quat_to_matrix`` of a non-versor has det != 1.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))

    def __matmul__(self, other: Sl2cMatrix) -> Sl2cMatrix:
        return matrix_mul(self, other)

    def __neg__(self) -> Sl2cMatrix:
        return Sl2cMatrix(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def is_unimodular(self, tol: float = ATOL) -> bool:
        return abs(self.det() - 1.0) <= tol

    def is_real(self, tol: float = ATOL) -> bool:
        return all(abs(z.imag) <= tol for z in self.entries())

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def to_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @classmethod
    def from_array(cls, arr) -> Sl2cMatrix:
        arr = np.asarray(arr, dtype=complex)
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    def allclose(self, other: Sl2cMatrix, atol: float = ATOL) -> bool:
        return all(abs(x - y) <= atol for x, y in zip(self.entries(), other.entries()))


@dataclass(frozen=True)
class HopfAngles:
    xi1: float
    eta: float
    xi2: float

    def __post_init__(self):
        for name in ("xi1", "eta", "xi2"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"Hopf angle {name} must be finite, got {v}")
            object.__setattr__(self, name, v)


ONE = Sl2cMatrix(1, 0, 0, 1)
I = Sl2cMatrix(1j, 0, 0, -1j)
J = Sl2cMatrix(0, 1, -1, 0)
K = Sl2cMatrix(0, 1j, 1j, 0)

BASIS = {"1": ONE, "I": I, "J": J, "K": K}


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q (ij = k, jk = i, ki = j)."""
    return Quaternion(
        p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    )


def quat_to_matrix(q: Quaternion) -> Sl2cMatrix:
    return Sl2cMatrix(
        complex(q.a, q.b), complex(q.c, q.d), complex(-q.c, q.d), complex(q.a, -q.b)
    )


def hopf_to_quat(angles: HopfAngles) -> Quaternion:
    xi1, eta, xi2 = angles.xi1, angles.eta, angles.xi2
    return Quaternion(
        math.cos(xi1) * math.cos(eta),
        math.sin(xi1) * math.cos(eta),
        math.cos(xi2) * math.sin(eta),
        math.sin(xi2) * math.sin(eta),
    )


def hopf_to_matrix(angles: HopfAngles) -> Sl2cMatrix:
    e1 = cmath.exp(1j * angles.xi1)
    e2 = cmath.exp(1j * angles.xi2)
    ce, se = math.cos(angles.eta), math.sin(angles.eta)
    return Sl2cMatrix(e1 * ce, e2 * se, -se / e2, ce / e1)


def quat_to_hopf(q: Quaternion, tol: float = 1e-14) -> tuple[HopfAngles, str | None]:
    """Recover Hopf angles from a versor.

    Returns ``(angles, free)`` where ``free`` names the angle that is not
    determined by ``q`` ("xi1" when cos(eta) == 0, "xi2" when sin(eta) == 0)
    and was set to 0, or None away from the poles.
    """
    r1 = math.hypot(q.a, q.b)
    r2 = math.hypot(q.c, q.d)
    eta = math.atan2(r2, r1)
    free = None
    if r1 <= tol:
        xi1, free = 0.0, "xi1"
    else:
        xi1 = math.atan2(q.b, q.a)
    if r2 <= tol:
        xi2, free = 0.0, "xi2"
    else:
        xi2 = math.atan2(q.d, q.c)
    return HopfAngles(xi1, eta, xi2), free


def matrix_mul(m1: Sl2cMatrix, m2: Sl2cMatrix) -> Sl2cMatrix:
    return Sl2cMatrix(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def matrix_inverse(m: Sl2cMatrix) -> Sl2cMatrix:
    # adjugate; equals the inverse only when det == 1
    return Sl2cMatrix(m.d, -m.b, -m.c, m.a)


def signed_basis_label(m: Sl2cMatrix, atol: float = ATOL) -> str | None:
    """Name ``m`` as a signed basis matrix: "K", "-J", ... or None.

    A leading minus corresponds to composing with the parity operator P.
    """
    for name, basis in BASIS.items():
        if m.allclose(basis, atol):
            return name
        if m.allclose(-basis, atol):
            return "-" + name
    return None


def composition_table() -> dict[tuple[str, str], str]:
    """Products Mat(row) @ Mat(col) over the basis {1, I, J, K}, labelled.

    Entry (R, C) is the matrix of the operator R∘C, i.e. the quaternion
    product r*c.
    """
    table = {}
    for r, mr in BASIS.items():
        for c, mc in BASIS.items():
            label = signed_basis_label(mr @ mc)
            assert label is not None
            table[(r, c)] = label
    return table


def matrix_to_json(m: Sl2cMatrix) -> list[list[list[float]]]:
    return [[[z.real, z.imag] for z in row] for row in ((m.a, m.b), (m.c, m.d))]


def matrix_from_json(obj) -> Sl2cMatrix:
    rows = [[complex(*z) if isinstance(z, (list, tuple)) else complex(z) for z in row] for row in obj]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("matrix must be a 2x2 nested list")
    return Sl2cMatrix(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
