"""Quaternion and dual-quaternion arithmetic over double floats.

Dual quaternions are kept as homogeneous 8-tuples (e0:e1:e2:e3:t0:t1:t2:t3);
two tuples that differ by a nonzero scalar factor denote the same element.
The Study bilinear form decides membership of the quadric of rigid
3-space displacements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadInputError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "q0", float(self.q0))
        object.__setattr__(self, "q1", float(self.q1))
        object.__setattr__(self, "q2", float(self.q2))
        object.__setattr__(self, "q3", float(self.q3))

    @staticmethod
    def from_array(a: Sequence[float]) -> "Quaternion":
        if len(a) != 4:
            raise BadInputError("quaternion needs 4 coordinates")
        return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3])

    def scalar(self) -> float:
        return self.q0

    def pure(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def dot(self, other: "Quaternion") -> float:
        return (self.q0 * other.q0 + self.q1 * other.q1
                + self.q2 * other.q2 + self.q3 * other.q3)

    def norm2(self) -> float:
        return self.dot(self)

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def is_zero(self, tol: float = 0.0) -> bool:
        return max(abs(self.q0), abs(self.q1), abs(self.q2), abs(self.q3)) <= tol

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        """Hamilton product, or scaling when `other` is a number."""
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.q0, self.q1, self.q2, self.q3
            b0, b1, b2, b3 = other.q0, other.q1, other.q2, other.q3
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        return Quaternion(self.q0 * other, self.q1 * other,
                          self.q2 * other, self.q3 * other)

    def __rmul__(self, other) -> "Quaternion":
        return Quaternion(self.q0 * other, self.q1 * other,
                          self.q2 * other, self.q3 * other)

    def __truediv__(self, other) -> "Quaternion":
        return Quaternion(self.q0 / other, self.q1 / other,
                          self.q2 / other, self.q3 / other)

    def isclose(self, other: "Quaternion", tol: float = DEFAULT_TOL) -> bool:
        return (self - other).array().__abs__().max() <= tol


ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0)
QJ = Quaternion(0.0, 0.0, 1.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


def embed_point3(p: Sequence[float]) -> Quaternion:
    """Embed a point of 3-space as a pure quaternion p1*i + p2*j + p3*k."""
    if len(p) != 3:
        raise BadInputError("expected a 3-dimensional point")
    return Quaternion(0.0, float(p[0]), float(p[1]), float(p[2]))


def embed_point4(p: Sequence[float]) -> Quaternion:
    """Embed a point of 4-space as the quaternion p0 + p1*i + p2*j + p3*k."""
    if len(p) != 4:
        raise BadInputError("expected a 4-dimensional point")
    return Quaternion(float(p[0]), float(p[1]), float(p[2]), float(p[3]))


def point3(q: Quaternion, tol: float = 1e-8) -> np.ndarray:
    """Inverse of embed_point3; rejects quaternions with a scalar residue."""
    if abs(q.q0) > tol * max(1.0, q.norm()):
        raise BadInputError(f"not a pure quaternion (scalar part {q.q0})")
    return np.array([q.q1, q.q2, q.q3])


def point4(q: Quaternion) -> np.ndarray:
    return q.array()


class DualQuaternion:
    """Homogeneous 8-tuple e + eps*t with eps^2 = 0.

    Instances are immutable. Any nonzero scalar multiple represents the
    same projective point; use normalized() for a canonical representative.
    A zero rotation part e is allowed at construction (the tuple is still a
    valid point of the ambient projective space) but carries no displacement;
    kinematic maps reject it.
    """

    __slots__ = ("e", "t")

    def __init__(self, e: Quaternion, t: Quaternion = Quaternion()):
        if e.is_zero() and t.is_zero():
            raise BadInputError("zero 8-tuple is not a projective point")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "t", t)

    def __setattr__(self, *_):
        raise AttributeError("DualQuaternion is immutable")

    def __repr__(self) -> str:
        return f"DualQuaternion(e={self.e}, t={self.t})"

    @staticmethod
    def from_coords(coords: Iterable[float]) -> "DualQuaternion":
        c = [float(v) for v in coords]
        if len(c) != 8:
            raise BadInputError("dual quaternion needs 8 coordinates")
        return DualQuaternion(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @staticmethod
    def identity() -> "DualQuaternion":
        return DualQuaternion(ONE, Quaternion())

    def coords(self) -> np.ndarray:
        return np.concatenate([self.e.array(), self.t.array()])

    # --- group structure -------------------------------------------------

    def __mul__(self, other: "DualQuaternion") -> "DualQuaternion":
        """Product under eps^2 = 0: (a+eps b)(c+eps d) = ac + eps(ad+bc)."""
        return DualQuaternion(self.e * other.e,
                              self.e * other.t + self.t * other.e)

    def conjugate(self) -> "DualQuaternion":
        return DualQuaternion(self.e.conjugate(), self.t.conjugate())

    def inverse(self) -> "DualQuaternion":
        """Projective inverse: self * self.inverse() ~ identity.

        Needs a nonzero rotation part.
        """
        n2 = self.e.norm2()
        if n2 == 0.0:
            raise BadInputError("no inverse for a zero rotation part")
        ec = self.e.conjugate()
        return DualQuaternion(ec, -1.0 / n2 * (ec * self.t * ec))

    def scaled(self, factor: float) -> "DualQuaternion":
        if factor == 0.0:
            raise BadInputError("scale factor must be nonzero")
        return DualQuaternion(self.e * factor, self.t * factor)

    def normalized(self) -> "DualQuaternion":
        """Canonical representative: unit rotation norm, first nonzero
        rotation coordinate positive."""
        n = self.e.norm()
        if n == 0.0:
            raise BadInputError("cannot normalize with zero rotation part")
        sign = 1.0
        for c in (self.e.q0, self.e.q1, self.e.q2, self.e.q3):
            if abs(c) > 1e-12 * n:
                sign = 1.0 if c > 0 else -1.0
                break
        return self.scaled(sign / n)

    # --- membership ------------------------------------------------------

    def in_generator_space(self, tol: float = DEFAULT_TOL) -> bool:
        """True when the rotation part vanishes; such points carry no motion."""
        scale = math.sqrt(self.e.norm2() + self.t.norm2())
        return self.e.norm() <= tol * scale

    def on_study_quadric(self, tol: float = DEFAULT_TOL) -> bool:
        """True when the tuple satisfies e.t = 0 (a rigid 3-space displacement)."""
        if self.in_generator_space(tol):
            return False
        x = self.normalized()
        return abs(x.e.dot(x.t)) <= tol * max(1.0, x.t.norm())

    def is_proportional(self, other: "DualQuaternion", tol: float = 1e-12) -> bool:
        a, b = self.coords(), other.coords()
        m = np.outer(a, b)
        return np.abs(m - m.T).max() <= tol * max(1.0, float(np.abs(m).max()))

    def isclose(self, other: "DualQuaternion", tol: float = DEFAULT_TOL) -> bool:
        """Projective comparison of normalized representatives."""
        a = self.normalized().coords()
        b = other.normalized().coords()
        return float(np.abs(a - b).max()) <= tol

    # --- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"e": [self.e.q0, self.e.q1, self.e.q2, self.e.q3],
                "t": [self.t.q0, self.t.q1, self.t.q2, self.t.q3]}

    @staticmethod
    def from_json(obj: dict) -> "DualQuaternion":
        try:
            e, t = obj["e"], obj["t"]
        except (KeyError, TypeError):
            raise BadInputError('expected {"e": [4 numbers], "t": [4 numbers]}')
        if len(e) != 4 or len(t) != 4:
            raise BadInputError("e and t must each hold 4 numbers")
        return DualQuaternion(Quaternion(*map(float, e)), Quaternion(*map(float, t)))


def study_bilinear(x: DualQuaternion, y: DualQuaternion) -> float:
    """Polarized quadric form: e(x).t(y) + e(y).t(x).

    study_bilinear(x, x) = 2 e.t, so x lies on the quadric of rigid
    displacements exactly when this vanishes on the diagonal.
    """
    return x.e.dot(y.t) + y.e.dot(x.t)
