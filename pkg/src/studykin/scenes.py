"""File-backed scene persistence: one JSON document per scene.

Writes are atomic (temp file + rename) and floats round-trip bit-exactly
through the shortest-decimal encoding the json module produces.  Mutating
operations on one scene are serialized by a per-scene lock.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
import uuid
from collections import defaultdict
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .design import ControlStructure
from .errors import BadInputError, NotFoundError

DATA_DIR_ENV = "STUDYKIN_DATA"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class Scene:
    id: str
    cs: ControlStructure
    meta: dict
    created: str
    modified: str

    def to_json(self) -> dict:
        doc = {"id": self.id, "created": self.created, "modified": self.modified,
               "meta": self.meta}
        doc.update(self.cs.to_json())
        return doc

    @staticmethod
    def from_json(doc: dict) -> "Scene":
        cs = ControlStructure.from_json(doc)
        return Scene(id=doc["id"], cs=cs, meta=doc.get("meta", {}),
                     created=doc["created"], modified=doc["modified"])


class SceneStore:
    def __init__(self, directory: Optional[str] = None):
        root = directory or os.environ.get(DATA_DIR_ENV) or \
            os.path.join(tempfile.gettempdir(), "studykin-scenes")
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        # reentrant: mutating routes hold the scene lock around load+write
        self._locks: dict[str, threading.RLock] = defaultdict(threading.RLock)
        self._registry_lock = threading.Lock()

    def lock(self, scene_id: str) -> threading.RLock:
        with self._registry_lock:
            return self._locks[scene_id]

    def _path(self, scene_id: str) -> Path:
        if not scene_id or any(c in scene_id for c in "/\\.") or len(scene_id) > 80:
            raise BadInputError(f"invalid scene id {scene_id!r}")
        return self.root / f"{scene_id}.json"

    def create(self, payload: dict, scene_id: Optional[str] = None) -> Scene:
        cs = ControlStructure.from_json(payload)
        meta = payload.get("meta", {})
        if not isinstance(meta, dict):
            raise BadInputError("meta must be an object")
        sid = scene_id or uuid.uuid4().hex[:12]
        now = _now()
        scene = Scene(id=sid, cs=cs, meta=meta, created=now, modified=now)
        self._write(scene)
        return scene

    def update(self, scene_id: str, payload: dict) -> Scene:
        with self.lock(scene_id):
            old = self.load(scene_id)
            cs = ControlStructure.from_json(payload)
            meta = payload.get("meta", old.meta)
            scene = Scene(id=scene_id, cs=cs, meta=meta,
                          created=old.created, modified=_now())
            self._write(scene)
            return scene

    def load(self, scene_id: str) -> Scene:
        path = self._path(scene_id)
        if not path.exists():
            raise NotFoundError(f"no scene {scene_id!r}")
        try:
            doc = json.loads(path.read_text())
            return Scene.from_json(doc)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise BadInputError(f"unreadable scene {scene_id!r}: {exc}")

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))

    def _write(self, scene: Scene) -> None:
        path = self._path(scene.id)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(scene.to_json(), fh)
            os.replace(tmp, path)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
