"""Displacement actions of dual quaternions on 3-space and 4-space.

A dual quaternion with nonzero rotation part acts on Euclidean 4-space as a
displacement fixing the ideal point of the x0-direction.  Tuples on the
Study quadric additionally fix every hyperplane x0 = k and act there as the
classical rigid displacements of 3-space.  Off the quadric, the action
shifts all points by a common amount along x0; removing that shift is an
orthogonal projection back onto the quadric ("labeled projection": the top
view plus the lost height).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import BadInputError, GeneratorSpaceError, OffQuadricError
from .quaternions import (DEFAULT_TOL, DualQuaternion, Quaternion,
                          embed_point3, embed_point4, point3, point4)


def _require_motion(x: DualQuaternion, tol: float = DEFAULT_TOL) -> None:
    if x.in_generator_space(tol):
        raise GeneratorSpaceError("zero rotation part carries no displacement")


def x0_shift(x: DualQuaternion) -> float:
    """Common translation along x0 applied to every point of 4-space.

    Scale-invariant; vanishes exactly on the Study quadric.
    """
    _require_motion(x)
    return -2.0 * x.e.dot(x.t) / x.e.norm2()


def study_projection(x: DualQuaternion) -> DualQuaternion:
    """Project a tuple onto the Study quadric, keeping the rotation part.

    Removes the component of t along e, i.e. the x0-shift of the induced
    4-space displacement; points already on the quadric are fixed.
    """
    _require_motion(x)
    kappa = x.e.dot(x.t) / x.e.norm2()
    return DualQuaternion(x.e, x.t - kappa * x.e)


def labeled_projection(x: DualQuaternion) -> tuple[DualQuaternion, float]:
    """Top-view pose on the quadric together with its height label."""
    return study_projection(x), x0_shift(x)


def transform_point3(x: DualQuaternion, p: Sequence[float],
                     tol: float = 1e-7) -> np.ndarray:
    """Apply a quadric point to a point of 3-space.

    The rotation part acts by conjugation, the dual part contributes the
    translation e*conj(t) mirrored to keep the result pure.
    """
    _require_motion(x)
    if not x.on_study_quadric(tol):
        raise OffQuadricError("tuple is off the Study quadric; project it first")
    u = x.normalized()
    q = embed_point3(p)
    rotated = u.e * q * u.e.conjugate()
    translation = u.t * u.e.conjugate() - u.e * u.t.conjugate()
    return point3(rotated + translation)


def transform_point4(x: DualQuaternion, p: Sequence[float]) -> np.ndarray:
    """Apply the 4-space displacement of an arbitrary tuple to a point.

    P -> e * P * conj(e) - 2 e * conj(t) on unit-normalized representatives.
    """
    _require_motion(x)
    u = x.normalized()
    q = embed_point4(p)
    return point4(u.e * q * u.e.conjugate() - 2.0 * (u.e * u.t.conjugate()))


@dataclass(frozen=True, eq=False)
class PlaneThroughOrigin:
    """Fixed plane of the rotation part, spanned by (1,0,0,0) and dir_e."""
    dir_e: np.ndarray
    angle: float
    span_contains_x0: bool = True


def rotation_plane_and_angle(e: Quaternion,
                             tol: float = DEFAULT_TOL) -> Optional[PlaneThroughOrigin]:
    """Fixed plane and turning angle of P -> e*P*conj(e) on 4-space.

    The plane joins the x0-direction with the direction of e read as a
    4-vector; the angle is twice the angle those two vectors enclose,
    reported in [0, 2*pi).  Returns None for e = +-1 (identity map).
    """
    n = e.norm()
    if n == 0.0:
        raise BadInputError("zero quaternion")
    u = e / n
    pure_norm = u.pure().norm()
    if pure_norm <= tol:
        return None
    angle = 2.0 * math.atan2(pure_norm, u.q0)
    return PlaneThroughOrigin(dir_e=u.array(), angle=angle % (2.0 * math.pi))


@dataclass(frozen=True, eq=False)
class GrassmannPlane:
    """Plane of 4-space parallel to the x0-direction, in quaternion triple form.

    lbar is the pure direction coordinate (the second spanning direction next
    to x0), lhat is always zero for planes parallel to x0, and moment fixes
    the offset from the origin: moment = lbar o c for the unique offset point
    c orthogonal to the span.
    """
    lbar: Quaternion
    moment: Quaternion
    lhat: Quaternion = field(default_factory=Quaternion)

    def direction(self) -> np.ndarray:
        """Unit 3-vector of the in-hyperplane spanning direction."""
        v = self.lbar.array()[1:]
        return v / np.linalg.norm(v)

    def point(self) -> np.ndarray:
        """Offset point (pure, orthogonal to the direction), as a 4-vector."""
        c = -1.0 / self.lbar.norm2() * (self.lbar * self.moment)
        return c.array()

    @staticmethod
    def from_direction_point(direction: Sequence[float],
                             point: Sequence[float]) -> "GrassmannPlane":
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        lbar = embed_point3(d)
        p = np.asarray(point, dtype=float)
        if p.shape == (4,):
            p = p[1:]
        c = embed_point3(p - d * float(p @ d))
        return GrassmannPlane(lbar=lbar, moment=lbar * c)

    def contains4(self, p: Sequence[float], tol: float = 1e-8) -> bool:
        """Membership test for a 4-space point."""
        q = np.asarray(p, dtype=float)
        rel = q - self.point()
        d3 = self.direction()
        span = np.stack([np.array([1.0, 0.0, 0.0, 0.0]),
                         np.concatenate([[0.0], d3])])
        residual = rel - span.T @ (span @ rel)
        return float(np.linalg.norm(residual)) <= tol * max(1.0, float(np.linalg.norm(q)))


def invariant_plane(x: DualQuaternion) -> GrassmannPlane:
    """Plane kept invariant by the 4-space displacement of the tuple.

    Exists whenever the rotation part has a nonzero pure component; its
    intersection with a hyperplane x0 = k is the axis of the induced rigid
    displacement there.
    """
    _require_motion(x)
    u = x.normalized()
    ebar = u.e.pure()
    if ebar.norm2() == 0.0:
        raise BadInputError("pure translations have no invariant plane")
    lbar = ebar / ebar.norm2()
    diff = u.e - u.e.conjugate()
    numerator = diff * (lbar * u.t - u.t * lbar)
    denominator = (diff * (u.e.conjugate() - u.e)).scalar()
    moment = numerator / denominator
    return GrassmannPlane(lbar=lbar, moment=moment)


@dataclass(frozen=True, eq=False)
class Line3:
    point: np.ndarray
    direction: np.ndarray

    def distance_to(self, p: Sequence[float]) -> float:
        rel = np.asarray(p, dtype=float) - self.point
        return float(np.linalg.norm(rel - self.direction * (rel @ self.direction)))


def displacement_axis(x: DualQuaternion, k: float = 0.0,
                      tol: float = 1e-7) -> Line3:
    """Axis of the rigid displacement induced in the hyperplane x0 = k.

    Computed as the intersection of the invariant plane with the hyperplane;
    independent of k because the plane is parallel to the x0-direction.
    """
    if not x.on_study_quadric(tol):
        raise OffQuadricError("axis extraction expects a quadric point")
    plane = invariant_plane(x)
    c = plane.point()
    return Line3(point=c[1:].copy(), direction=plane.direction())


def se3_kind(x: DualQuaternion, tol: float = 1e-8) -> str:
    """Coarse type of a quadric point: identity, translation, rotation or screw.

    A rotation is a zero-pitch screw: the translation component along the
    rotation axis vanishes.
    """
    if not x.on_study_quadric(max(tol, DEFAULT_TOL)):
        raise OffQuadricError("classification expects a quadric point")
    u = x.normalized()
    ebar = u.e.pure()
    tau = u.t * u.e.conjugate() - u.e * u.t.conjugate()
    if ebar.norm() <= tol:
        return "identity" if tau.norm() <= tol else "translation"
    pitch_component = tau.dot(ebar) / ebar.norm()
    if abs(pitch_component) <= tol * max(1.0, tau.norm()):
        return "rotation"
    return "screw"


def translation_tuple(v: Sequence[float]) -> DualQuaternion:
    """Tuple whose 4-space displacement is the translation by v (3- or 4-vector)."""
    w = np.asarray(v, dtype=float)
    if w.shape == (3,):
        w = np.concatenate([[0.0], w])
    if w.shape != (4,):
        raise BadInputError("translation vector must have 3 or 4 components")
    q = embed_point4(w)
    return DualQuaternion(Quaternion(1.0), -0.5 * q.conjugate())
