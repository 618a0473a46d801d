"""Linear complexes of rigid-displacement tuples, and the line-geometry
analogy they extend.

A point of line space appears in a screw's path-normal complex when a
bilinear pairing vanishes; in the same way, a quadric displacement belongs
to the linear complex of an arbitrary 8-tuple ("pole") when the polarized
quadric form of the two vanishes.  The relative motion carrying a member
to the pole is then an orthogonal 4-space displacement: its dual part is a
pure quaternion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadInputError, GeneratorSpaceError, OffQuadricError
from .kinematics import study_projection
from .quaternions import DEFAULT_TOL, DualQuaternion, Quaternion, study_bilinear

PURE_TOL = 1e-9


@dataclass(frozen=True)
class PlueckerLine:
    """Homogeneous line coordinates (l01:l02:l03:l23:l31:l12)."""
    l01: float
    l02: float
    l03: float
    l23: float
    l31: float
    l12: float

    def __post_init__(self):
        if max(map(abs, self.coords())) == 0.0:
            raise BadInputError("zero tuple is not a line")

    def coords(self) -> tuple[float, ...]:
        return (self.l01, self.l02, self.l03, self.l23, self.l31, self.l12)


@dataclass(frozen=True)
class ScrewCoords:
    """Homogeneous screw coordinates; any nonzero 6-tuple."""
    s01: float
    s02: float
    s03: float
    s23: float
    s31: float
    s12: float

    def __post_init__(self):
        if max(map(abs, self.coords())) == 0.0:
            raise BadInputError("zero screw excluded")

    def coords(self) -> tuple[float, ...]:
        return (self.s01, self.s02, self.s03, self.s23, self.s31, self.s12)


def on_pluecker_quadric(line: PlueckerLine, tol: float = DEFAULT_TOL) -> bool:
    """l01*l23 + l02*l31 + l03*l12 = 0 characterizes actual lines."""
    c = np.array(line.coords())
    c = c / np.abs(c).max()
    return abs(c[0] * c[3] + c[1] * c[4] + c[2] * c[5]) <= tol


def screw_complex_contains(screw: ScrewCoords, line: PlueckerLine,
                           tol: float = DEFAULT_TOL) -> bool:
    """Membership of a line in the screw's path-normal complex (polarity
    with respect to the line quadric)."""
    s = np.array(screw.coords())
    l = np.array(line.coords())
    s = s / np.abs(s).max()
    l = l / np.abs(l).max()
    value = s[0] * l[3] + s[1] * l[4] + s[2] * l[5] \
        + s[3] * l[0] + s[4] * l[1] + s[5] * l[2]
    return abs(value) <= tol


@dataclass(frozen=True, eq=False)
class DisplacementComplex:
    """Linear complex of quadric displacements with respect to a pole tuple."""
    pole: DualQuaternion

    def __post_init__(self):
        if self.pole.in_generator_space():
            raise GeneratorSpaceError("pole must have a rotation part")


def complex_contains(cx: DisplacementComplex, m: DualQuaternion,
                     tol: float = DEFAULT_TOL) -> bool:
    """Membership: the member lies in the polar hyperplane of the pole.

    Scale-invariant in both arguments; the member must be a quadric point.
    """
    if not m.on_study_quadric(max(tol, DEFAULT_TOL)):
        raise OffQuadricError("complex members are quadric points")
    p = cx.pole.normalized()
    u = m.normalized()
    return abs(study_bilinear(p, u)) <= tol * max(1.0, p.t.norm(), u.t.norm())


def relative_motion(pole: DualQuaternion, m: DualQuaternion) -> DualQuaternion:
    """Displacement carrying the pose m to the pose of the pole.

    Equals pole * inverse(m) for unit representatives: the rotation part is
    e(pole) * conj(e(m)), the dual part e(pole) * conj(t(m)) +
    t(pole) * conj(e(m)).  For complex members the dual part is pure.
    """
    p = pole.normalized()
    u = m.normalized()
    g = p.e * u.e.conjugate()
    v = p.e * u.t.conjugate() + p.t * u.e.conjugate()
    return DualQuaternion(g, v)


def complex_axis(cx: DisplacementComplex) -> DualQuaternion:
    """Quadric projection of the pole; for on-quadric poles, the pole itself."""
    return study_projection(cx.pole)


def is_orthogonal_displacement(x: DualQuaternion, tol: float = PURE_TOL) -> bool:
    """Translation vector orthogonal to the rotation direction, equivalently
    a pure dual part on unit representatives."""
    u = x.normalized()
    return abs(u.t.q0) <= tol * max(1.0, u.t.norm())


def sample_members(cx: DisplacementComplex, n: int, seed: int = 0) -> list[DualQuaternion]:
    """Deterministic sample of n quadric points inside the complex.

    Draws a random rotation part, then solves the two linear conditions
    (quadric membership and polarity against the pole) for the dual part,
    adding a random element of the 2-dimensional solution space.
    """
    if n < 1:
        raise BadInputError("need n >= 1")
    rng = np.random.default_rng(seed)
    pole = cx.pole.normalized()
    ep, tp = pole.e.array(), pole.t.array()
    members: list[DualQuaternion] = []
    while len(members) < n:
        e = rng.uniform(-1.0, 1.0, size=4)
        ne = np.linalg.norm(e)
        if ne < 0.3:
            continue
        e = e / ne
        a = np.stack([e, ep])
        rhs = np.array([0.0, -float(e @ tp)])
        # pathological alignment of the two conditions: resample
        if np.linalg.svd(a, compute_uv=False)[1] < 1e-6:
            continue
        t_particular, *_ = np.linalg.lstsq(a, rhs, rcond=None)
        _, _, vt = np.linalg.svd(a)
        null_basis = vt[2:]
        t = t_particular + null_basis.T @ rng.uniform(-1.0, 1.0, size=2)
        members.append(DualQuaternion(Quaternion(*e), Quaternion(*t)))
    return members
