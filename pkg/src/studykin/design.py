"""Rational motion design in the 8-tuple parameter space.

Control poses are arbitrary tuples (their heights above the quadric are a
design degree of freedom); segment weights are encoded by Farin parameters.
Evaluation is the projective de Casteljau scheme; the designed motion is
displayed as its labeled projection: quadric poses plus height labels.
The design objective trims the maximal height excursion of the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadInputError, GeneratorSpaceError
from .kinematics import labeled_projection, x0_shift
from .quaternions import DualQuaternion, Quaternion

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_FARIN_BOUNDS = (0.01, 0.99)


class ControlStructure:
    """Bezier control poses with Farin weight parameters.

    The first and last pose must lie on the quadric (their height labels
    are 0); every pose needs a nonzero rotation part; each Farin parameter
    f encodes the adjacent weight ratio f/(1-f) and is strictly inside
    (0,1).
    """

    __slots__ = ("ctrl", "farin")

    def __init__(self, ctrl: Sequence[DualQuaternion], farin: Sequence[float]):
        ctrl = tuple(ctrl)
        farin = tuple(float(f) for f in farin)
        if len(ctrl) < 2:
            raise BadInputError("need at least 2 control poses")
        if len(farin) != len(ctrl) - 1:
            raise BadInputError("need one Farin parameter per control segment")
        for f in farin:
            if not 0.0 < f < 1.0:
                raise BadInputError(f"Farin parameter {f} outside (0,1)")
        for i, c in enumerate(ctrl):
            if c.in_generator_space():
                raise BadInputError(f"control pose {i} has zero rotation part")
        for i in (0, len(ctrl) - 1):
            if not ctrl[i].on_study_quadric(1e-9):
                raise BadInputError(f"end pose {i} must lie on the quadric")
        object.__setattr__(self, "ctrl", ctrl)
        object.__setattr__(self, "farin", farin)

    def __setattr__(self, *_):
        raise AttributeError("ControlStructure is immutable")

    def weights(self) -> np.ndarray:
        w = [1.0]
        for f in self.farin:
            w.append(w[-1] * f / (1.0 - f))
        return np.array(w)

    def degree(self) -> int:
        return len(self.ctrl) - 1

    def height(self, i: int) -> float:
        return x0_shift(self.ctrl[i])

    def with_pose(self, i: int, pose: DualQuaternion) -> "ControlStructure":
        ctrl = list(self.ctrl)
        ctrl[i] = pose
        return ControlStructure(ctrl, self.farin)

    def with_kappa(self, i: int, kappa: float) -> "ControlStructure":
        """Move control pose i along its height axis: replace the component
        of t along e so that e.t/|e|^2 = kappa.  The projected quadric pose
        is untouched."""
        c = self.ctrl[i]
        old = c.e.dot(c.t) / c.e.norm2()
        return self.with_pose(i, DualQuaternion(c.e, c.t + (kappa - old) * c.e))

    def kappa(self, i: int) -> float:
        c = self.ctrl[i]
        return c.e.dot(c.t) / c.e.norm2()

    def with_farin(self, i: int, f: float) -> "ControlStructure":
        farin = list(self.farin)
        farin[i] = f
        return ControlStructure(self.ctrl, farin)

    def to_json(self) -> dict:
        return {"ctrl": [c.to_json() for c in self.ctrl],
                "farin": list(self.farin)}

    @staticmethod
    def from_json(obj: dict) -> "ControlStructure":
        try:
            ctrl = [DualQuaternion.from_json(c) for c in obj["ctrl"]]
            farin = [float(f) for f in obj["farin"]]
        except (KeyError, TypeError, ValueError):
            raise BadInputError('expected {"ctrl": [...], "farin": [...]}')
        return ControlStructure(ctrl, farin)


@dataclass(frozen=True)
class DesignObjective:
    """Sampling density and stopping tolerance for excursion minimization."""
    grid: int = 257
    tol: float = 1e-9

    def __post_init__(self):
        if self.grid < 33:
            raise BadInputError("objective grid must be at least 33")
        if self.tol <= 0:
            raise BadInputError("tolerance must be positive")


@dataclass(frozen=True)
class FreeParameters:
    """Mask naming the optimizer's degrees of freedom: Farin indices and
    interior control-pose heights."""
    farin: tuple[int, ...] = ()
    heights: tuple[int, ...] = ()

    def validate(self, cs: ControlStructure) -> None:
        if not self.farin and not self.heights:
            raise BadInputError("empty parameter mask")
        for i in self.farin:
            if not 0 <= i < len(cs.farin):
                raise BadInputError(f"no Farin parameter {i}")
        for i in self.heights:
            if not 0 < i < len(cs.ctrl) - 1:
                raise BadInputError(f"height {i} is not an interior pose")


def _weighted_points(cs: ControlStructure) -> np.ndarray:
    return np.stack([w * c.coords() for w, c in zip(cs.weights(), cs.ctrl)])


def decasteljau_eval(cs: ControlStructure, t: float) -> DualQuaternion:
    """Point of the design curve at t in [0,1] by repeated interpolation
    of the weighted control tuples.  Endpoints reproduce the end poses
    exactly."""
    b = _weighted_points(cs)
    n = len(b)
    for level in range(1, n):
        b = (1.0 - t) * b[:n - level] + t * b[1:n - level + 1]
    coords = b[0]
    scale = float(np.abs(coords).max())
    if scale == 0.0 or float(np.linalg.norm(coords[:4])) <= 1e-12 * scale:
        raise GeneratorSpaceError(f"curve meets the zero-rotation space at t={t}")
    return DualQuaternion.from_coords(coords)


def farin_pose(cs: ControlStructure, i: int) -> tuple[DualQuaternion, float]:
    """Weight point of segment i with its height label.

    Its locus under a varying Farin parameter is the straight segment
    between the weighted neighbour poses, i.e. a one-parameter motion whose
    quadric projection is a vertical Darboux motion.
    """
    if not 0 <= i < len(cs.farin):
        raise BadInputError(f"no segment {i}")
    w = cs.weights()
    f = cs.farin[i]
    coords = ((1.0 - f) * w[i] * cs.ctrl[i].coords()
              + f * w[i + 1] * cs.ctrl[i + 1].coords())
    pose = DualQuaternion.from_coords(coords)
    return pose, x0_shift(pose)


def motion_curve(cs: ControlStructure,
                 samples: int) -> list[tuple[float, DualQuaternion, float]]:
    """Uniformly sampled labeled projection of the design curve:
    (parameter, quadric pose, height) triples."""
    if samples < 2:
        raise BadInputError("need at least 2 samples")
    out = []
    for t in np.linspace(0.0, 1.0, samples):
        pose, height = labeled_projection(decasteljau_eval(cs, float(t)))
        out.append((float(t), pose.normalized(), height))
    return out


def _golden_max(f, lo: float, hi: float, tol: float = 1e-12) -> tuple[float, float]:
    """Golden-section maximizer for a unimodal section."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
    xm = 0.5 * (a + b)
    return xm, f(xm)


def max_x0_excursion(cs: ControlStructure, grid: int = 257) -> float:
    """Largest |height| along the curve: grid scan plus golden-section
    refinement around the grid argmax.  Zero exactly when the whole curve
    stays on the quadric."""
    if grid < 2:
        raise BadInputError("grid too small")
    ts = np.linspace(0.0, 1.0, grid)
    vals = np.array([abs(x0_shift(decasteljau_eval(cs, float(t)))) for t in ts])
    k = int(np.argmax(vals))
    lo = ts[max(k - 1, 0)]
    hi = ts[min(k + 1, grid - 1)]
    _, refined = _golden_max(
        lambda t: abs(x0_shift(decasteljau_eval(cs, t))), float(lo), float(hi))
    return max(float(vals[k]), refined)


@dataclass(frozen=True)
class OptimizeResult:
    structure: ControlStructure
    trace: tuple[float, ...] = field(default=())


def optimize_heights(cs: ControlStructure, free: FreeParameters,
                     obj: DesignObjective = DesignObjective()) -> OptimizeResult:
    """Minimize the maximal height excursion over the free parameters.

    Cyclic coordinate descent with a golden-section line search per
    coordinate; a step is taken only when it improves the objective, so the
    trace is non-increasing and the result never exceeds the input value.
    Deterministic for fixed inputs.
    """
    free.validate(cs)

    def objective(c: ControlStructure) -> float:
        return max_x0_excursion(c, obj.grid)

    current = cs
    value = objective(current)
    trace = [value]

    def minimize_1d(f, lo: float, hi: float) -> tuple[float, float]:
        x, v = _golden_max(lambda u: -f(u), lo, hi, tol=max(obj.tol * 1e-3, 1e-13))
        return x, -v

    for _ in range(200):
        start_value = value
        for i in free.heights:
            center = current.kappa(i)
            span = max(1.0, abs(center), value)
            x, v = minimize_1d(lambda u: objective(current.with_kappa(i, u)),
                               center - 2.0 * span, center + 2.0 * span)
            if v < value:
                current, value = current.with_kappa(i, x), v
                trace.append(value)
        for i in free.farin:
            x, v = minimize_1d(lambda u: objective(current.with_farin(i, u)),
                               _FARIN_BOUNDS[0], _FARIN_BOUNDS[1])
            if v < value:
                current, value = current.with_farin(i, x), v
                trace.append(value)
        if start_value - value < obj.tol:
            break
    return OptimizeResult(structure=current, trace=tuple(trace))


# --- demo scenes -----------------------------------------------------------

def quadratic_demo_scene() -> ControlStructure:
    """Three-pose design: on-quadric end poses (height 0) and one interior
    pose lifted to height -28/9, the bundled showcase scene."""
    s = math.sqrt(2.0) / 2.0
    c0 = DualQuaternion.identity()
    e1 = Quaternion(0.5, 0.5, 0.5, 0.5)
    t_perp = Quaternion(0.3, -0.3, 0.7, -0.7)
    kappa = 14.0 / 9.0
    c1 = DualQuaternion(e1, t_perp + kappa * e1)
    e2 = Quaternion(s, 0.0, 0.0, s)
    c2 = DualQuaternion(e2, Quaternion(0.0, 1.5 * s, -0.5 * s, 0.0))
    return ControlStructure([c0, c1, c2], [0.4, 0.65])


def fig_height_demo_scene() -> ControlStructure:
    """Quadratic scene whose five labeled poses (start, weight point,
    control, weight point, end) carry the heights 0, 3/4, 1, 3/4, 0."""
    c0 = DualQuaternion.identity()
    c1 = DualQuaternion(Quaternion(0.0, 1.0), Quaternion(-0.25, -0.5))
    c2 = DualQuaternion(Quaternion(0.0, 0.0, 0.0, 1.0),
                        Quaternion(0.0, -0.25, 0.0, 0.0))
    return ControlStructure([c0, c1, c2], [0.5, 0.5])
