"""Command-line front end.

Every subcommand prints one canonical JSON payload (byte-identical to the
HTTP service's response for the same request) or CSV where asked; failures
print {"code", "message"} on stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .complexes import (DisplacementComplex, complex_axis, complex_contains,
                        relative_motion, sample_members)
from .design import (DesignObjective, FreeParameters, fig_height_demo_scene,
                     max_x0_excursion, motion_curve, optimize_heights,
                     quadratic_demo_scene)
from .errors import BadInputError, StudyKinError
from .kinematics import labeled_projection, study_projection, transform_point3, \
    transform_point4
from .motions import (DarbouxParams, MotionLine, Trajectory,
                      circular_translation, classify_line, darboux_type1,
                      trajectory_to_csv)
from .serialize import (canonical_json, dq_payload, motion_class_payload,
                        motion_curve_payload, optimize_payload, parse_dq,
                        parse_scene)


def _parse_point(text: str) -> np.ndarray:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise BadInputError(f"cannot parse point {text!r}")
    if len(values) not in (3, 4):
        raise BadInputError("point needs 3 or 4 comma-separated coordinates")
    return np.array(values)


def _load_json_arg(text: str):
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise BadInputError(f"cannot read {text[1:]!r}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInputError(f"invalid JSON: {exc}")


def _load_scene(arg: str):
    if arg == "demo":
        return quadratic_demo_scene()
    if arg == "demo-heights":
        return fig_height_demo_scene()
    return parse_scene(_load_json_arg(arg if arg.startswith("@") else "@" + arg))


def _emit(payload: dict) -> None:
    sys.stdout.write(canonical_json(payload) + "\n")


def _indices(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise BadInputError(f"cannot parse index list {text!r}")


def cmd_act(args) -> None:
    x = parse_dq(_load_json_arg(args.dq))
    p = _parse_point(args.point)
    if len(p) == 3:
        out = transform_point3(x, p, tol=args.tol)
    else:
        out = transform_point4(x, p)
    _emit({"point": [float(v) for v in out]})


def cmd_psh(args) -> None:
    x = parse_dq(_load_json_arg(args.dq))
    _emit(dq_payload(study_projection(x).normalized()))


def cmd_project(args) -> None:
    x = parse_dq(_load_json_arg(args.dq))
    pose, height = labeled_projection(x)
    _emit({"pose": dq_payload(pose.normalized()), "height": height})


def cmd_classify(args) -> None:
    line = MotionLine(parse_dq(_load_json_arg(args.a)),
                      parse_dq(_load_json_arg(args.b)))
    _emit(motion_class_payload(classify_line(line, tol=args.tol)))


def cmd_darboux(args) -> None:
    taus = np.linspace(0.0, args.tau_max, args.samples)
    if args.circular_c is not None:
        pts = np.stack([circular_translation(args.circular_c, args.rho, t)
                        for t in taus])
    else:
        params = DarbouxParams(beta=args.beta, gamma=args.gamma, nu=args.nu)
        point = _parse_point(args.point)
        if len(point) != 4:
            raise BadInputError("darboux sampling expects a 4-dimensional point")
        pts = np.stack([darboux_type1(params, t, point) for t in taus])
    traj = Trajectory(params=taus, points=pts)
    if args.format == "csv":
        sys.stdout.write(trajectory_to_csv(traj))
    else:
        _emit({"samples": [{"s": float(s), "point": [float(v) for v in p]}
                           for s, p in traj.samples]})


def cmd_complex(args) -> None:
    cx = DisplacementComplex(parse_dq(_load_json_arg(args.pole)))
    if args.action == "contains":
        m = parse_dq(_load_json_arg(args.m))
        _emit({"contains": complex_contains(cx, m, tol=args.tol)})
    elif args.action == "axis":
        _emit(dq_payload(complex_axis(cx).normalized()))
    elif args.action == "members":
        members = sample_members(cx, args.n, seed=args.seed)
        _emit({"members": [dq_payload(m) for m in members]})
    else:  # relative
        m = parse_dq(_load_json_arg(args.m))
        _emit(dq_payload(relative_motion(cx.pole, m)))


def cmd_design(args) -> None:
    cs = _load_scene(args.scene)
    if args.action == "eval":
        _emit(motion_curve_payload(motion_curve(cs, args.samples)))
    elif args.action == "excursion":
        _emit({"excursion": max_x0_excursion(cs, args.grid)})
    else:  # optimize
        free = FreeParameters(farin=_indices(args.free_farin),
                              heights=_indices(args.free_heights))
        obj = DesignObjective(grid=args.grid, tol=args.tol)
        result = optimize_heights(cs, free, obj)
        value = max_x0_excursion(result.structure, args.grid)
        _emit(optimize_payload(result, value))
        if args.write:
            if args.scene in ("demo", "demo-heights"):
                raise BadInputError("cannot write back a builtin scene")
            Path(args.scene).write_text(
                canonical_json(result.structure.to_json()) + "\n")


def cmd_export(args) -> None:
    cs = _load_scene(args.scene)
    curve = motion_curve(cs, args.samples)
    if args.format == "csv":
        lines = ["t,e0,e1,e2,e3,t0,t1,t2,t3,height"]
        for t, pose, h in curve:
            vals = [t, *pose.coords(), h]
            lines.append(",".join(repr(float(v)) for v in vals))
        text = "\n".join(lines) + "\n"
    else:
        text = canonical_json(motion_curve_payload(curve)) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_serve(args) -> None:
    import uvicorn

    from .scenes import SceneStore
    from .server import create_app, default_port

    app = create_app(SceneStore(args.data_dir))
    uvicorn.run(app, host=args.host, port=args.port or default_port())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="studykin",
        description="Dual-quaternion kinematics toolkit: point actions, "
                    "quadric projection, line motions, displacement "
                    "complexes and rational motion design.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument("--tol", type=float, default=1e-7,
                       help="tolerance override for membership checks")

    p = sub.add_parser("act", help="apply a tuple to a 3- or 4-space point")
    p.add_argument("--dq", required=True)
    p.add_argument("--point", required=True)
    add_tol(p)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("psh", help="project a tuple onto the quadric")
    p.add_argument("--dq", required=True)
    p.set_defaults(func=cmd_psh)

    p = sub.add_parser("project", help="labeled projection: pose plus height")
    p.add_argument("--dq", required=True)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("classify", help="motion type of the line through two tuples")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("darboux", help="sample the planar-trajectory motion family")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--nu", type=float, default=0.0)
    p.add_argument("--circular-c", type=float, default=None,
                   help="sample the circular translation instead")
    p.add_argument("--rho", type=float, default=0.0)
    p.add_argument("--point", default="0,0,0,0")
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--tau-max", type=float, default=6.283185307179586)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_darboux)

    p = sub.add_parser("complex", help="linear complex of quadric displacements")
    p.add_argument("action", choices=("contains", "axis", "members", "relative"))
    p.add_argument("--pole", required=True)
    p.add_argument("--m")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    add_tol(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("design", help="evaluate or optimize a design scene")
    p.add_argument("action", choices=("eval", "excursion", "optimize"))
    p.add_argument("--scene", required=True,
                   help="scene JSON path, or 'demo' / 'demo-heights'")
    p.add_argument("--samples", type=int, default=33)
    p.add_argument("--grid", type=int, default=257)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--free-heights", default="")
    p.add_argument("--free-farin", default="")
    p.add_argument("--write", action="store_true",
                   help="persist the optimized scene back to the file")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("export", help="export the motion curve of a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--samples", type=int, default=65)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--data-dir", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except StudyKinError as exc:
        sys.stderr.write(canonical_json(exc.payload()) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
