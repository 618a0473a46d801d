"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both front ends emit byte-identical bytes for the same logical request:
one dumps routine (sorted keys, compact separators, shortest round-trip
floats) and one payload builder per result type.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .design import ControlStructure, OptimizeResult, farin_pose
from .errors import BadInputError
from .kinematics import (GrassmannPlane, labeled_projection,
                         transform_point3)
from .motions import (CircularDarboux, MotionClass, PlaneRotation, Trajectory,
                      Translation)
from .quaternions import DualQuaternion


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return [float(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def canonical_json(payload: dict) -> str:
    return json.dumps(_plain(payload), sort_keys=True, separators=(",", ":"))


def dq_payload(x: DualQuaternion) -> dict:
    return x.to_json()


def parse_dq(obj: Any) -> DualQuaternion:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise BadInputError(f"invalid JSON: {exc}")
    return DualQuaternion.from_json(obj)


def plane_payload(plane: GrassmannPlane) -> dict:
    return {"direction": [float(v) for v in plane.direction()],
            "point": [float(v) for v in plane.point()]}


def motion_class_payload(cls: MotionClass) -> dict:
    if isinstance(cls, Translation):
        return {"kind": cls.kind,
                "direction": [float(v) for v in cls.direction]}
    if isinstance(cls, PlaneRotation):
        return {"kind": cls.kind, "plane": plane_payload(cls.plane)}
    assert isinstance(cls, CircularDarboux)
    return {"kind": cls.kind, "c": cls.c, "rho": cls.rho,
            "plane": plane_payload(cls.plane)}


def frame_payload(quadric_pose: DualQuaternion) -> dict:
    """Displayable rigid frame of an on-quadric pose: origin plus the images
    of the three unit directions.  Computed server-side so clients render
    without any kinematics of their own."""
    origin = transform_point3(quadric_pose, [0.0, 0.0, 0.0])
    axes = [transform_point3(quadric_pose, e) - origin for e in np.eye(3)]
    return {"origin": [float(v) for v in origin],
            "axes": [[float(v) for v in a] for a in axes]}


def pose_entry(t: float, pose: DualQuaternion, height: float) -> dict:
    return {"t": t, "pose": dq_payload(pose), "height": height,
            "frame": frame_payload(pose)}


def motion_curve_payload(curve: list[tuple[float, DualQuaternion, float]]) -> dict:
    return {"poses": [pose_entry(t, pose, h) for t, pose, h in curve]}


def handles_payload(cs: ControlStructure, arc_samples: int = 33) -> dict:
    """Editor handles: control poses and Farin poses with their heights,
    displayable frames, and the server-evaluated arc each Farin handle is
    constrained to (the origin path of its segment motion)."""
    controls = []
    for i, c in enumerate(cs.ctrl):
        proj, height = labeled_projection(c)
        controls.append({"index": i, "pose": dq_payload(c), "height": height,
                         "kappa": cs.kappa(i), "frame": frame_payload(proj.normalized())})
    farin = []
    for i, f in enumerate(cs.farin):
        pose, height = farin_pose(cs, i)
        proj = labeled_projection(pose)[0].normalized()
        arc = []
        for fv in np.linspace(0.01, 0.99, arc_samples):
            p, h = farin_pose(cs.with_farin(i, float(fv)), i)
            arc.append({"f": float(fv), "height": h,
                        "frame": frame_payload(labeled_projection(p)[0].normalized())})
        farin.append({"segment": i, "f": f, "pose": dq_payload(pose),
                      "height": height, "frame": frame_payload(proj),
                      "arc": arc})
    return {"controls": controls, "farin": farin}


def trajectory_payload(traj: Trajectory) -> dict:
    return {"samples": [{"s": s, "point": [float(v) for v in p]}
                        for s, p in traj.samples]}


def optimize_payload(result: OptimizeResult, excursion: float) -> dict:
    return {"scene": result.structure.to_json(),
            "trace": list(result.trace),
            "excursion": excursion}


def parse_scene(obj: Any) -> ControlStructure:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise BadInputError(f"invalid JSON: {exc}")
    if not isinstance(obj, dict):
        raise BadInputError("scene must be a JSON object")
    return ControlStructure.from_json(obj)
