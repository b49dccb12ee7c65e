"""Run the whole service loop in-process: train an artifact, boot the
HTTP app, log in, add records, classify, filter, and log out."""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from medtriage.artifacts import TrainOptions, train_artifact
from medtriage.service import ServiceConfig, create_app
from medtriage.synthetic import make_keyword_corpus

workdir = Path(tempfile.mkdtemp())
model_dir = workdir / "models"
model_dir.mkdir()

print("training a logreg artifact on the synthetic corpus...")
result = train_artifact(
    make_keyword_corpus(200, seed=5),
    TrainOptions(kind="logreg", seed=7, epochs=30, learning_rate=0.5),
)
result.artifact.save(model_dir / "logreg.json")
(model_dir / "logreg.manifest.json").write_text(
    json.dumps({"kind": "logreg", "created_at": "2026-01-01T00:00:00+00:00",
                "test_accuracy": result.test_accuracy})
)

config = ServiceConfig(
    store_dir=str(workdir / "store"),
    model_dir=str(model_dir),
    bootstrap_username="dr.demo",
    bootstrap_password="demo-password",
)
client = TestClient(create_app(config))

print("\n1. health check (no auth):", client.get("/api/health").json())

token = client.post(
    "/api/login", json={"username": "dr.demo", "password": "demo-password"}
).json()["token"]
headers = {"Authorization": f"Bearer {token}"}
print(f"2. logged in, token {token[:8]}...")

print("3. available models:", client.get("/api/models", headers=headers).json())

record = client.post(
    "/api/records",
    json={
        "patient_name": "Jordan Doe",
        "text": "HISTORY: chest pressure.\nFINDINGS: aorta dilated, systolic murmur.\nPLAN: echo.",
    },
    headers=headers,
).json()
print(f"4. created {record['record_id']}; findings parsed -> {record['findings_text']!r}")

classified = client.post(
    f"/api/records/{record['record_id']}/classify",
    json={"model_id": "logreg"},
    headers=headers,
).json()
cls = classified["classification"]
print(f"5. classified as {cls['label']} with probabilities "
      f"{[round(p, 3) for p in cls['probabilities']]}")

matches = client.get("/api/records", params={"category": cls["label"]}, headers=headers).json()
print(f"6. filter category={cls['label']} returns {len(matches)} record(s)")

client.post("/api/logout", headers=headers)
blocked = client.get("/api/records", headers=headers)
print(f"7. after logout, listing returns HTTP {blocked.status_code}")
