"""HTTP JSON service exposing the toolkit, plus static hosting of the
browser editor bundle when one is built.

Responses are rendered through the same canonical serializer as the CLI,
so both front ends return byte-identical payloads for one logical request.
Stochastic routes take an explicit seed (default 0) and are deterministic.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

import math

from .complexes import DisplacementComplex, sample_members
from .design import (DesignObjective, FreeParameters, max_x0_excursion,
                     motion_curve, optimize_heights)
from .errors import BadInputError, NotFoundError, StudyKinError
from .kinematics import (study_projection, transform_point3,
                         translation_tuple)
from .motions import MotionLine, classify_line
from .quaternions import DualQuaternion, Quaternion
from .scenes import SceneStore
from .serialize import (canonical_json, dq_payload, handles_payload,
                        motion_class_payload, motion_curve_payload,
                        optimize_payload)

PORT_ENV = "STUDYKIN_PORT"
UI_ENV = "STUDYKIN_UI"


def default_port() -> int:
    return int(os.environ.get(PORT_ENV, "8000"))


def _json_response(payload: dict, status: int = 200) -> Response:
    return Response(content=canonical_json(payload) + "\n", status_code=status,
                    media_type="application/json")


async def _body(request: Request) -> dict:
    try:
        data = await request.json()
    except Exception:
        raise BadInputError("request body must be JSON")
    if not isinstance(data, dict):
        raise BadInputError("request body must be a JSON object")
    return data


def _int_field(data: dict, name: str, default: Optional[int] = None,
               minimum: int = 1) -> int:
    value = data.get(name, default)
    if value is None:
        raise BadInputError(f"missing field {name!r}")
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise BadInputError(f"{name} must be an integer >= {minimum}")
    return value


def _ui_directory() -> Optional[Path]:
    configured = os.environ.get(UI_ENV)
    if configured:
        path = Path(configured)
        return path if path.is_dir() else None
    bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return bundled if bundled.is_dir() else None


def create_app(store: Optional[SceneStore] = None) -> FastAPI:
    store = store or SceneStore()
    app = FastAPI(title="studykin", docs_url=None, redoc_url=None)

    @app.exception_handler(StudyKinError)
    async def _error_handler(_request, exc: StudyKinError):
        status = 404 if isinstance(exc, NotFoundError) else 400
        return _json_response(exc.payload(), status=status)

    @app.get("/scenes")
    async def list_scenes():
        return _json_response({"scenes": store.list_ids()})

    @app.post("/scenes")
    async def create_scene(request: Request):
        scene = store.create(await _body(request))
        return _json_response(scene.to_json())

    @app.get("/scenes/{scene_id}")
    async def get_scene(scene_id: str):
        return _json_response(store.load(scene_id).to_json())

    @app.put("/scenes/{scene_id}")
    async def put_scene(scene_id: str, request: Request):
        scene = store.update(scene_id, await _body(request))
        return _json_response(scene.to_json())

    @app.post("/scenes/{scene_id}/evaluate")
    async def evaluate_scene(scene_id: str, request: Request):
        data = await _body(request)
        samples = _int_field(data, "samples", default=33, minimum=2)
        scene = store.load(scene_id)
        return _json_response(motion_curve_payload(motion_curve(scene.cs, samples)))

    @app.post("/scenes/{scene_id}/excursion")
    async def scene_excursion(scene_id: str, request: Request):
        data = await _body(request)
        grid = _int_field(data, "grid", default=257, minimum=2)
        scene = store.load(scene_id)
        return _json_response({"excursion": max_x0_excursion(scene.cs, grid)})

    @app.post("/scenes/{scene_id}/optimize")
    async def optimize_scene(scene_id: str, request: Request):
        data = await _body(request)
        mask = data.get("mask", {})
        if not isinstance(mask, dict):
            raise BadInputError("mask must be an object")
        try:
            free = FreeParameters(farin=tuple(mask.get("farin", ())),
                                  heights=tuple(mask.get("heights", ())))
        except TypeError:
            raise BadInputError("mask lists must hold integers")
        grid = _int_field(data, "grid", default=257, minimum=33)
        tol = data.get("tol", 1e-9)
        if not isinstance(tol, (int, float)) or tol <= 0:
            raise BadInputError("tol must be a positive number")
        obj = DesignObjective(grid=grid, tol=float(tol))
        with store.lock(scene_id):
            scene = store.load(scene_id)
            result = optimize_heights(scene.cs, free, obj)
            value = max_x0_excursion(result.structure, grid)
            if data.get("persist", False):
                doc = result.structure.to_json()
                doc["meta"] = scene.meta
                store.update(scene_id, doc)
        return _json_response(optimize_payload(result, value))

    @app.post("/scenes/{scene_id}/handles")
    async def scene_handles(scene_id: str, request: Request):
        data = await _body(request)
        arc_samples = _int_field(data, "arc_samples", default=33, minimum=2)
        scene = store.load(scene_id)
        return _json_response(handles_payload(scene.cs, arc_samples))

    @app.post("/scenes/{scene_id}/pose-edit")
    async def pose_edit(scene_id: str, request: Request):
        """Apply a rigid edit (world-frame translation and/or rotation about
        the pose's own origin) and/or a height change to one control pose,
        persist, and return the updated scene."""
        data = await _body(request)
        index = _int_field(data, "index", minimum=0)
        with store.lock(scene_id):
            scene = store.load(scene_id)
            cs = scene.cs
            if index >= len(cs.ctrl):
                raise BadInputError(f"no control pose {index}")
            pose = cs.ctrl[index]
            kappa = cs.kappa(index)
            proj = study_projection(pose).normalized()
            rotate = data.get("rotate")
            if rotate is not None:
                try:
                    axis = [float(v) for v in rotate["axis"]]
                    angle = float(rotate["angle"])
                except (KeyError, TypeError, ValueError):
                    raise BadInputError('rotate needs {"axis": [3], "angle": rad}')
                norm = math.sqrt(sum(v * v for v in axis))
                if len(axis) != 3 or norm == 0.0:
                    raise BadInputError("rotation axis must be a nonzero 3-vector")
                half = angle / 2.0
                rot = DualQuaternion(Quaternion(
                    math.cos(half), *(math.sin(half) * v / norm for v in axis)))
                o = transform_point3(proj, [0.0, 0.0, 0.0])
                g = translation_tuple(o) * rot * translation_tuple(-o)
                proj = study_projection(g * proj).normalized()
            translate = data.get("translate")
            if translate is not None:
                try:
                    d = [float(v) for v in translate]
                except (TypeError, ValueError):
                    raise BadInputError("translate must be a 3-vector")
                if len(d) != 3:
                    raise BadInputError("translate must be a 3-vector")
                proj = study_projection(translation_tuple(d) * proj).normalized()
            if "height" in data:
                height = data["height"]
                if not isinstance(height, (int, float)) or isinstance(height, bool):
                    raise BadInputError("height must be a number")
                kappa = -float(height) / 2.0
                if kappa != 0.0 and index in (0, len(cs.ctrl) - 1):
                    raise BadInputError("end poses keep height 0")
            edited = DualQuaternion(proj.e, proj.t + kappa * proj.e)
            doc = cs.with_pose(index, edited).to_json()
            doc["meta"] = scene.meta
            updated = store.update(scene_id, doc)
        return _json_response(updated.to_json())

    @app.post("/classify")
    async def classify(request: Request):
        data = await _body(request)
        if "a" not in data or "b" not in data:
            raise BadInputError('expected {"a": tuple, "b": tuple}')
        line = MotionLine(DualQuaternion.from_json(data["a"]),
                          DualQuaternion.from_json(data["b"]))
        return _json_response(motion_class_payload(classify_line(line)))

    @app.post("/psh")
    async def psh(request: Request):
        x = DualQuaternion.from_json(await _body(request))
        return _json_response(dq_payload(study_projection(x).normalized()))

    @app.post("/complex/members")
    async def complex_members(request: Request):
        data = await _body(request)
        if "pole" not in data:
            raise BadInputError('expected {"pole": tuple, "n": count, "seed": int}')
        cx = DisplacementComplex(DualQuaternion.from_json(data["pole"]))
        n = _int_field(data, "n", default=5)
        seed = data.get("seed", 0)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise BadInputError("seed must be an integer")
        members = sample_members(cx, n, seed=seed)
        return _json_response({"members": [dq_payload(m) for m in members]})

    ui = _ui_directory()
    if ui is not None:
        app.mount("/", StaticFiles(directory=ui, html=True), name="ui")

    return app


def main() -> None:
    import uvicorn
    uvicorn.run(create_app(), host="127.0.0.1", port=default_port())


if __name__ == "__main__":
    main()
