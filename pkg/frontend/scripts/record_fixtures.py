"""Record API responses from the live service into test fixtures.

Run from the repository root with the Python package installed:

    python3 frontend/scripts/record_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from studykin.design import quadratic_demo_scene
from studykin.scenes import SceneStore
from studykin.server import create_app

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(SceneStore(tempfile.mkdtemp())))
    doc = quadratic_demo_scene().to_json()
    doc["meta"] = {"name": "showcase", "height_fractions": {"1": "-28/9"}}
    scene = client.post("/scenes", json=doc).json()
    sid = scene["id"]

    fixtures = {
        "scene.json": scene,
        "evaluate.json": client.post(f"/scenes/{sid}/evaluate",
                                     json={"samples": 33}).json(),
        "handles.json": client.post(f"/scenes/{sid}/handles",
                                    json={"arc_samples": 65}).json(),
        "excursion.json": client.post(f"/scenes/{sid}/excursion",
                                      json={"grid": 257}).json(),
        "optimize.json": client.post(
            f"/scenes/{sid}/optimize",
            json={"mask": {"heights": [1]}, "grid": 65, "tol": 1e-8}).json(),
    }
    for name, payload in fixtures.items():
        (OUT / name).write_text(json.dumps(payload, indent=1) + "\n")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
