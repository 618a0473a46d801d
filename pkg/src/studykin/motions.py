"""Straight lines of the parameter space read as one-parameter motions.

A line spanned by two independent 8-tuples sweeps a one-parameter family of
4-space displacements.  Every such family is a translation along a fixed
direction, a rotation about a fixed plane, or a circular Darboux motion
(rotation about a fixed plane composed with a circular translation parallel
to it); all point trajectories of the third kind are circles.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BadInputError, DegenerateLineError, GeneratorSpaceError
from .kinematics import GrassmannPlane, transform_point4, translation_tuple
from .quaternions import DualQuaternion, Quaternion, embed_point4

_CLASSIFY_TOL = 1e-9


class MotionLine:
    """Line through two projectively independent 8-tuples, not inside the
    zero-rotation generator space."""

    __slots__ = ("a", "b")

    def __init__(self, a: DualQuaternion, b: DualQuaternion):
        if a.is_proportional(b, tol=1e-12):
            raise DegenerateLineError("the two tuples span a point, not a line")
        if a.e.is_zero(1e-14) and b.e.is_zero(1e-14):
            raise DegenerateLineError("line lies in the zero-rotation space")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *_):
        raise AttributeError("MotionLine is immutable")

    def conjugated(self, g: DualQuaternion) -> "MotionLine":
        """Line of the same motion seen from a transformed reference frame."""
        gi = g.inverse()
        return MotionLine(g * self.a * gi, g * self.b * gi)


def motion_at(line: MotionLine, s: float) -> DualQuaternion:
    """Pose of the line motion at parameter s (s=1 gives a, s=0 gives b).

    Raises when the rotation part vanishes at s: the line punctures the
    generator space there and carries no pose.
    """
    es = s * line.a.e + (1.0 - s) * line.b.e
    ts = s * line.a.t + (1.0 - s) * line.b.t
    scale = math.sqrt(line.a.coords() @ line.a.coords()
                      + line.b.coords() @ line.b.coords())
    if es.norm() <= 1e-13 * scale:
        raise GeneratorSpaceError(f"line meets the zero-rotation space at s={s}")
    return DualQuaternion(es, ts).normalized()


# --- motion classes -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Translation:
    """All poses share the rotation; points run along a fixed direction."""
    direction: np.ndarray  # unit 4-vector

    kind = "translation"

    def pose(self, travel: float) -> DualQuaternion:
        return translation_tuple(travel * self.direction)


@dataclass(frozen=True, eq=False)
class PlaneRotation:
    """Rotation about a fixed plane parallel to the x0-direction."""
    plane: GrassmannPlane

    kind = "plane-rotation"

    def pose(self, angle: float) -> DualQuaternion:
        d = self.plane.direction()
        axis = Quaternion(0.0, d[0], d[1], d[2])
        rot = DualQuaternion(Quaternion(math.cos(angle / 2.0)) + math.sin(angle / 2.0) * axis)
        g = translation_tuple(self.plane.point())
        return g * rot * g.inverse()


@dataclass(frozen=True, eq=False)
class CircularDarboux:
    """Rotation about a fixed plane composed with a circular translation
    parallel to it; c is the translation circle radius, rho its phase
    relative to the x0-axis within the rotation plane.

    All data describes the motion relative to the pose of line endpoint a
    (rho in particular is a phase against that base pose and its 8-tuple
    representative).  The plane carries the minimal orbits: trajectories
    of radius exactly c run inside it; every other point orbits on a
    circle of radius sqrt(c^2 + d^2) at plane distance d.
    """
    plane: GrassmannPlane
    c: float
    rho: float

    kind = "circular-darboux"

    def pose(self, tau: float) -> DualQuaternion:
        d = self.plane.direction()
        w = Quaternion(0.0, d[0], d[1], d[2])
        g = _rotation_taking(w)
        v_can = g * embed_point4(self.plane.point()) * g.conjugate()
        t2 = Quaternion(-self.c * math.cos(self.rho), self.c * math.sin(self.rho),
                        v_can.q3, -v_can.q2)
        ct, st = math.cos(tau / 2.0), math.sin(tau / 2.0)
        pose_can = DualQuaternion(Quaternion(ct, st), st * t2)
        gd = DualQuaternion(g.conjugate())
        return gd * pose_can * gd.inverse()


MotionClass = Translation | PlaneRotation | CircularDarboux


def _rotation_taking(w: Quaternion, target: Quaternion = Quaternion(0.0, 1.0)) -> Quaternion:
    """Unit quaternion g with g*w*conj(g) = target (both pure units)."""
    u = w / w.norm()
    v = target / target.norm()
    dot = u.dot(v)
    if dot < -1.0 + 1e-12:
        # opposite directions: half-turn about any axis orthogonal to target
        probe = Quaternion(0.0, 0.0, 1.0) if abs(v.q2) < 0.9 else Quaternion(0.0, 0.0, 0.0, 1.0)
        axis = (probe * v).pure()
        return axis / axis.norm()
    g = Quaternion(1.0 + dot) + (u * v).pure()
    return g / g.norm()


# --- trajectories ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled point path, optionally with the exact rational-quadratic
    homogeneous coordinates (numerators per axis plus common denominator,
    ascending coefficients in the line parameter)."""
    params: np.ndarray
    points: np.ndarray  # shape (n, 4)
    num_coeffs: Optional[np.ndarray] = None  # shape (4, 3)
    den_coeffs: Optional[np.ndarray] = None  # shape (3,)

    @property
    def samples(self) -> list[tuple[float, np.ndarray]]:
        return [(float(s), p) for s, p in zip(self.params, self.points)]


def _quat_sandwich(a: Quaternion, p: Quaternion, b: Quaternion) -> Quaternion:
    return a * p * b.conjugate()


def sample_trajectory(line: MotionLine, point: Sequence[float],
                      params: Sequence[float]) -> Trajectory:
    """Trajectory of a 4-space point under the line motion.

    Also carries the exact quadratic homogeneous coordinates of the path,
    so circularity can be certified projectively as well as metrically.
    """
    pts = np.array([transform_point4(motion_at(line, s), point) for s in params])
    p = embed_point4(np.asarray(point, dtype=float))
    u, v = line.b.e, line.a.e - line.b.e
    w, x = line.b.t, line.a.t - line.b.t
    # numerator(s) = (u+sv) p conj(u+sv) - 2 (u+sv) conj(w+sx), per coordinate
    n0 = _quat_sandwich(u, p, u) - 2.0 * (u * w.conjugate())
    n1 = (_quat_sandwich(u, p, v) + _quat_sandwich(v, p, u)
          - 2.0 * (u * x.conjugate() + v * w.conjugate()))
    n2 = _quat_sandwich(v, p, v) - 2.0 * (v * x.conjugate())
    num = np.stack([n0.array(), n1.array(), n2.array()], axis=1)
    den = np.array([u.norm2(), 2.0 * u.dot(v), v.norm2()])
    return Trajectory(params=np.asarray(params, dtype=float), points=pts,
                      num_coeffs=num, den_coeffs=den)


@dataclass(frozen=True, eq=False)
class CircularityCertificate:
    circular: bool
    verdict: str  # circle | point | segment | non-planar | planar-not-circular
    center: Optional[np.ndarray] = None
    radius: Optional[float] = None
    max_deviation: float = 0.0

    def __bool__(self) -> bool:
        return self.circular


def _spread_triple(pts2d: np.ndarray) -> tuple[int, int, int]:
    """Indices of three samples spanning a large triangle."""
    d0 = np.linalg.norm(pts2d - pts2d[0], axis=1)
    i = int(np.argmax(d0))
    di = np.linalg.norm(pts2d - pts2d[i], axis=1)
    j = int(np.argmax(di))
    rel_i = pts2d - pts2d[i]
    rel_j = pts2d - pts2d[j]
    area = np.abs(rel_i[:, 0] * rel_j[:, 1] - rel_i[:, 1] * rel_j[:, 0])
    k = int(np.argmax(area))
    return i, j, k


def is_circular(traj: Trajectory, tol: float = 1e-8) -> CircularityCertificate:
    """Metric concyclicity test with certificate.

    Fits the affine 2-plane of the samples, takes the circumcenter of three
    well-spread samples and accepts when every sample is equidistant from it
    within tol.  Coincident and collinear sample sets are reported as the
    degenerate verdicts "point" and "segment".
    """
    pts = np.asarray(traj.points, dtype=float)
    n = len(pts)
    if n < 2:
        raise BadInputError("need at least 2 samples")
    centroid = pts.mean(axis=0)
    centered = pts - centroid
    svals = np.linalg.svd(centered, compute_uv=False)
    scale = max(1.0, float(np.linalg.norm(centroid)))
    if svals[0] <= tol * scale:
        return CircularityCertificate(False, "point", center=centroid, radius=0.0)
    if svals[1] <= tol * svals[0]:
        return CircularityCertificate(False, "segment")
    if n < 5:
        raise BadInputError("need at least 5 samples in general position")
    if svals[2] > tol * svals[0]:
        return CircularityCertificate(False, "non-planar",
                                      max_deviation=float(svals[2]))
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    basis = vt[:2]
    flat = centered @ basis.T
    i, j, k = _spread_triple(flat)
    p1, p2, p3 = flat[i], flat[j], flat[k]
    # circumcenter of the triangle p1 p2 p3 in plane coordinates
    m = 2.0 * np.array([p2 - p1, p3 - p1])
    rhs = np.array([p2 @ p2 - p1 @ p1, p3 @ p3 - p1 @ p1])
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det) <= 1e-300:
        return CircularityCertificate(False, "segment")
    center2d = np.linalg.solve(m, rhs)
    radii = np.linalg.norm(flat - center2d, axis=1)
    radius = float(radii.mean())
    deviation = float(np.abs(radii - radius).max())
    center = centroid + basis.T @ center2d
    ok = deviation <= tol * max(1.0, radius)
    verdict = "circle" if ok else "planar-not-circular"
    return CircularityCertificate(ok, verdict, center=center, radius=radius,
                                  max_deviation=deviation)


def projective_circularity(traj: Trajectory, tol: float = 1e-8) -> bool:
    """Analytic circle test for rational-quadratic trajectories.

    The two ideal points of the path (parameter values where the common
    denominator vanishes) must be non-real and lie on the quadric
    sum(coords^2) = 0; this is the projective characterization a metric
    sample test approximates.
    """
    if traj.num_coeffs is None or traj.den_coeffs is None:
        raise BadInputError("trajectory carries no polynomial data")
    den = traj.den_coeffs
    if abs(den[2]) <= 1e-14 * max(abs(den[0]), abs(den[1]), 1e-300):
        return False  # denominator degenerates: path closes at infinity
    disc = den[1] ** 2 - 4.0 * den[2] * den[0]
    if disc >= 0.0:
        return False  # real ideal points: not an ellipse, never a circle
    root = (-den[1] + 1j * math.sqrt(-disc)) / (2.0 * den[2])
    vals = traj.num_coeffs[:, 0] + traj.num_coeffs[:, 1] * root \
        + traj.num_coeffs[:, 2] * root * root
    mag = float(np.sum(np.abs(vals) ** 2))
    if mag <= 1e-300:
        return False
    return abs(np.sum(vals * vals)) <= tol * mag


# --- classification -------------------------------------------------------

def classify_line(line: MotionLine, tol: float = _CLASSIFY_TOL) -> MotionClass:
    """Decide which of the three motion types a line carries.

    Rotation parts proportional along the line mean a translation; a
    parameter-independent quadric defect means a rotation about a fixed
    plane; everything else is a circular Darboux motion whose radius and
    phase are read off in a canonical frame relative to the pose of
    endpoint a.
    """
    ea, eb = line.a.e, line.b.e
    pencil = np.stack([ea.array(), eb.array()])
    sv = np.linalg.svd(pencil, compute_uv=False)
    if sv[1] <= max(tol * sv[0], 1e-300):
        return _classify_translation(line)
    u, v = eb, ea - eb
    w, x = line.b.t, line.a.t - line.b.t
    num = np.array([u.dot(w), u.dot(x) + v.dot(w), v.dot(x)])
    den = np.array([u.norm2(), 2.0 * u.dot(v), v.norm2()])
    k0, k1 = num[0] / den[0], num.sum() / den.sum()
    k = 0.5 * (k0 + k1)
    defect = num - k * den
    scale = max(float(np.abs(num).max()), abs(k) * float(np.abs(den).max()), 1.0)
    if float(np.abs(defect).max()) <= tol * scale:
        rel = line.b * line.a.inverse()
        from .kinematics import invariant_plane
        return PlaneRotation(plane=invariant_plane(rel))
    return _classify_darboux(line)


def _classify_translation(line: MotionLine) -> Translation:
    if line.a.e.norm() >= line.b.e.norm():
        base, other = line.a, line.b
    else:
        base, other = line.b, line.a
    lam = base.e.dot(other.e) / base.e.norm2()
    t_dir = other.t - lam * base.t
    if t_dir.norm() <= 1e-13 * max(base.t.norm(), other.t.norm(), 1.0):
        raise DegenerateLineError("tuples are projectively equal")
    v = (-2.0 * (base.e * t_dir.conjugate())).array()
    v = v / np.linalg.norm(v)
    for c in v:
        if abs(c) > 1e-12:
            if c < 0:
                v = -v
            break
    return Translation(direction=v)


def _classify_darboux(line: MotionLine) -> CircularDarboux:
    rel = line.b * line.a.inverse()
    e2 = rel.e.pure()
    norm_e2 = e2.norm()
    w_hat = e2 / norm_e2
    g = _rotation_taking(w_hat)
    t_can = (g * rel.t * g.conjugate()) / norm_e2
    c = math.hypot(t_can.q0, t_can.q1)
    rho = math.atan2(t_can.q1, -t_can.q0)
    v_can = Quaternion(0.0, 0.0, -t_can.q3, t_can.q2)
    offset = g.conjugate() * v_can * g
    plane = GrassmannPlane.from_direction_point(w_hat.array()[1:], offset.array()[1:])
    return CircularDarboux(plane=plane, c=c, rho=rho)


# --- Darboux generators in explicit matrix form ----------------------------

@dataclass(frozen=True)
class DarbouxParams:
    """Shape parameters of the first family of planar-trajectory motions of
    4-space: beta >= 0, gamma >= 1, nu >= 0."""
    beta: float
    gamma: float
    nu: float = 0.0

    def __post_init__(self):
        if self.beta < 0 or self.gamma < 1 or self.nu < 0:
            raise BadInputError("require beta >= 0, gamma >= 1, nu >= 0")


def darboux_type1(params: DarbouxParams, tau: float,
                  point: Sequence[float]) -> np.ndarray:
    """Planar-trajectory motion: block rotation on (x2,x3) plus a
    tau-dependent translation controlled by (beta, gamma, nu).

    Trajectories are circles for every point exactly when nu = 0 and the
    translation degenerates to a circular one.
    """
    p = np.asarray(point, dtype=float)
    if p.shape != (4,):
        raise BadInputError("expected a 4-dimensional point")
    ct, st = math.cos(tau), math.sin(tau)
    out = np.array([p[0], p[1], ct * p[2] - st * p[3], st * p[2] + ct * p[3]])
    b, gm, nu = params.beta, params.gamma, params.nu
    out += np.array([
        b / (2.0 * math.sqrt(gm)) * (gm * st + 1.0 - ct),
        b / (2.0 * math.sqrt(gm)) * math.sqrt(gm * gm - 1.0) * (1.0 - ct),
        0.0,
        nu / 2.0 * (ct - 1.0),
    ])
    return out


def circular_translation(c: float, rho: float, tau: float) -> np.ndarray:
    """Translation vector tracing a circle of radius c in the x0x1-plane,
    phase-shifted by rho; rho = 0 starts tangent to x0."""
    st, vc = math.sin(tau), 1.0 - math.cos(tau)
    return c * np.array([math.cos(rho) * st - math.sin(rho) * vc,
                         math.sin(rho) * st + math.cos(rho) * vc,
                         0.0, 0.0])


def trajectory_to_csv(traj: Trajectory) -> str:
    """CSV export, shortest round-trip decimals per value."""
    buf = io.StringIO()
    buf.write("s,x0,x1,x2,x3\n")
    for s, p in traj.samples:
        vals = [float(s)] + [float(v) for v in p]
        buf.write(",".join(repr(v) for v in vals) + "\n")
    return buf.getvalue()
