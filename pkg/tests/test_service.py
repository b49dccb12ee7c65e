import base64
import json
import threading

import httpx
import pytest
from fastapi.testclient import TestClient

from medtriage.artifacts import TrainOptions, train_artifact
from medtriage.service import (
    ExternalOcrExtractor,
    ServiceConfig,
    create_app,
    parse_findings,
)


@pytest.fixture(scope="module")
def model_dir(tmp_path_factory, keyword_corpus):
    directory = tmp_path_factory.mktemp("models")
    result = train_artifact(
        keyword_corpus, TrainOptions(kind="logreg", seed=7, epochs=30, learning_rate=0.5)
    )
    result.artifact.save(directory / "logreg.json")
    (directory / "logreg.manifest.json").write_text(
        json.dumps(
            {
                "kind": "logreg",
                "created_at": "2026-08-09T00:00:00+00:00",
                "test_accuracy": result.test_accuracy,
            }
        )
    )
    return directory, result.artifact


@pytest.fixture()
def service(tmp_path, model_dir):
    directory, artifact = model_dir
    config = ServiceConfig(
        store_dir=str(tmp_path / "store"),
        model_dir=str(directory),
        bootstrap_username="dr.grey",
        bootstrap_password="s3cretpw",
    )
    app = create_app(config)
    client = TestClient(app, raise_server_exceptions=False)
    return client, config, artifact


def login(client, username="dr.grey", password="s3cretpw") -> str:
    response = client.post("/api/login", json={"username": username, "password": password})
    assert response.status_code == 200, response.text
    return response.json()["token"]


def auth(token: str) -> dict:
    return {"Authorization": f"Bearer {token}"}


class TestFindingsParsing:
    def test_inline_headers(self):
        text = "FINDINGS: mild hydronephrosis. IMPRESSION: stable."
        assert parse_findings(text) == "mild hydronephrosis."

    def test_line_based_headers(self):
        text = "HISTORY\nfell down.\nFINDINGS\nfracture of the radius.\nIMPRESSION\nhealing."
        assert parse_findings(text) == "fracture of the radius."

    def test_case_insensitive_header(self):
        assert parse_findings("Findings: aortic dilation. PLAN: monitor.") == "aortic dilation."

    def test_no_header_returns_whole_text(self):
        text = "routine visit, no complaints"
        assert parse_findings(text) == text

    def test_lowercase_findings_in_prose_is_not_a_header(self):
        text = "murmur and aorta findings were reviewed"
        assert parse_findings(text) == text

    def test_mid_line_uppercase_header_triggers(self):
        text = "EXAM normal today. FINDINGS: aortic stenosis. PLAN: refer."
        assert parse_findings(text) == "aortic stenosis."

    def test_no_following_header_runs_to_end(self):
        assert parse_findings("FINDINGS: colitis in the sigmoid colon") == (
            "colitis in the sigmoid colon"
        )


class TestAuth:
    def test_login_logout_cycle(self, service):
        client, _, _ = service
        token = login(client)
        assert client.get("/api/records", headers=auth(token)).status_code == 200
        assert client.post("/api/logout", headers=auth(token)).status_code == 200
        response = client.get("/api/records", headers=auth(token))
        assert response.status_code == 401

    def test_wrong_password_and_unknown_user_same_message(self, service):
        client, _, _ = service
        bad_pw = client.post(
            "/api/login", json={"username": "dr.grey", "password": "wrong"}
        )
        unknown = client.post(
            "/api/login", json={"username": "nobody", "password": "wrong"}
        )
        assert bad_pw.status_code == unknown.status_code == 401
        assert bad_pw.json()["message"] == unknown.json()["message"]

    def test_every_protected_route_rejects_missing_token(self, service):
        client, _, _ = service
        probes = [
            ("POST", "/api/logout", {}),
            ("POST", "/api/records", {"patient_name": "x", "text": "y"}),
            ("GET", "/api/records", None),
            ("POST", "/api/records/rec-000001/classify", {"model_id": "logreg"}),
            ("GET", "/api/models", None),
        ]
        exercised = set()
        for method, url, body in probes:
            response = client.request(method, url, json=body)
            assert response.status_code == 401, (method, url, response.text)
            exercised.add(url.split("rec-")[0].rstrip("/"))
        app_paths = {
            route.path
            for route in client.app.routes
            if route.path.startswith("/api") and route.path not in ("/api/login", "/api/health")
        }
        probed_paths = {"/api/logout", "/api/records", "/api/records/{record_id}/classify", "/api/models"}
        assert app_paths == probed_paths  # no unprobed protected route exists

    def test_garbage_token_rejected(self, service):
        client, _, _ = service
        assert client.get("/api/records", headers=auth("ffff")).status_code == 401

    def test_health_is_public(self, service):
        client, _, _ = service
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "model_loaded": True}


class TestRecords:
    def test_create_parses_findings(self, service):
        client, _, _ = service
        token = login(client)
        response = client.post(
            "/api/records",
            json={
                "patient_name": "Ada",
                "text": "FINDINGS: mild hydronephrosis. IMPRESSION: stable.",
            },
            headers=auth(token),
        )
        assert response.status_code == 200
        record = response.json()
        assert record["findings_text"] == "mild hydronephrosis."
        assert record["classification"] is None

    def test_text_without_header_keeps_whole_text(self, service):
        client, _, _ = service
        token = login(client)
        record = client.post(
            "/api/records",
            json={"patient_name": "Bo", "text": "aorta and murmur noted"},
            headers=auth(token),
        ).json()
        assert record["findings_text"] == "aorta and murmur noted"

    def test_image_with_passthrough_is_extraction_error(self, service):
        client, _, _ = service
        token = login(client)
        response = client.post(
            "/api/records",
            json={
                "patient_name": "Cy",
                "image_base64": base64.b64encode(b"\x89PNG fake").decode(),
            },
            headers=auth(token),
        )
        assert response.status_code == 422
        assert response.json()["error_code"] == "extraction_failed"

    def test_empty_patient_name_rejected(self, service):
        client, _, _ = service
        token = login(client)
        response = client.post(
            "/api/records", json={"patient_name": " ", "text": "x"}, headers=auth(token)
        )
        assert response.status_code == 422

    def test_filters(self, service, keyword_corpus):
        client, _, _ = service
        token = login(client)
        heart_text = next(e.transcription for e in keyword_corpus if e.label == "Heart")
        brain_text = next(e.transcription for e in keyword_corpus if e.label == "Brain")
        ids = {}
        for name, text in (("Pat Heart", heart_text), ("Pat Brain", brain_text), ("Quinn", "checkup")):
            ids[name] = client.post(
                "/api/records", json={"patient_name": name, "text": text}, headers=auth(token)
            ).json()["record_id"]
        client.post(
            f"/api/records/{ids['Pat Heart']}/classify",
            json={"model_id": "logreg"},
            headers=auth(token),
        ).raise_for_status()

        by_category = client.get(
            "/api/records", params={"category": "Heart"}, headers=auth(token)
        ).json()
        assert [r["record_id"] for r in by_category] == [ids["Pat Heart"]]

        by_name = client.get("/api/records", params={"q": "pat"}, headers=auth(token)).json()
        assert {r["patient_name"] for r in by_name} == {"Pat Heart", "Pat Brain"}

        everything = client.get("/api/records", headers=auth(token)).json()
        assert len(everything) == 3
        created = [r["created_at"] for r in everything]
        assert created == sorted(created, reverse=True)

        nothing = client.get(
            "/api/records", params={"q": "zzz"}, headers=auth(token)
        )
        assert nothing.status_code == 200
        assert nothing.json() == []

    def test_inverted_date_range_rejected(self, service):
        client, _, _ = service
        token = login(client)
        response = client.get(
            "/api/records",
            params={"from": "2026-02-01", "to": "2026-01-01"},
            headers=auth(token),
        )
        assert response.status_code == 422


class TestClassify:
    def test_service_path_equals_library_path(self, service, keyword_corpus):
        client, _, artifact = service
        token = login(client)
        example = keyword_corpus[3]
        record = client.post(
            "/api/records",
            json={"patient_name": "Eq", "text": example.transcription},
            headers=auth(token),
        ).json()
        updated = client.post(
            f"/api/records/{record['record_id']}/classify",
            json={"model_id": "logreg"},
            headers=auth(token),
        ).json()
        label, probs = artifact.classify(record["findings_text"])
        assert updated["classification"]["label"] == label
        assert updated["classification"]["probabilities"] == [float(p) for p in probs]
        assert updated["classification"]["model_id"] == "logreg"
        assert sum(updated["classification"]["probabilities"]) == pytest.approx(1.0, abs=1e-6)

    def test_unknown_record_404(self, service):
        client, _, _ = service
        token = login(client)
        response = client.post(
            "/api/records/rec-999999/classify", json={"model_id": "logreg"}, headers=auth(token)
        )
        assert response.status_code == 404

    def test_unknown_model_404(self, service):
        client, _, _ = service
        token = login(client)
        record = client.post(
            "/api/records", json={"patient_name": "Em", "text": "aorta"}, headers=auth(token)
        ).json()
        response = client.post(
            f"/api/records/{record['record_id']}/classify",
            json={"model_id": "nope"},
            headers=auth(token),
        )
        assert response.status_code == 404

    def test_numeric_findings_unclassifiable_and_record_unchanged(self, service):
        client, _, _ = service
        token = login(client)
        record = client.post(
            "/api/records", json={"patient_name": "Nu", "text": "120 80"}, headers=auth(token)
        ).json()
        response = client.post(
            f"/api/records/{record['record_id']}/classify",
            json={"model_id": "logreg"},
            headers=auth(token),
        )
        assert response.status_code == 422
        assert response.json()["error_code"] == "unclassifiable"
        listed = client.get("/api/records", headers=auth(token)).json()
        stored = next(r for r in listed if r["record_id"] == record["record_id"])
        assert stored["classification"] is None

    def test_models_listing(self, service):
        client, _, _ = service
        token = login(client)
        models = client.get("/api/models", headers=auth(token)).json()
        assert models == [
            {
                "model_id": "logreg",
                "architecture": "logreg",
                "trained_at": "2026-08-09T00:00:00+00:00",
                "test_accuracy": pytest.approx(1.0),
            }
        ]


class TestPersistence:
    def test_restart_preserves_records_and_classifications(self, tmp_path, model_dir):
        directory, _ = model_dir
        config = ServiceConfig(
            store_dir=str(tmp_path / "store"),
            model_dir=str(directory),
            bootstrap_username="doc",
            bootstrap_password="pw123456",
        )
        client = TestClient(create_app(config))
        token = login(client, "doc", "pw123456")
        record = client.post(
            "/api/records",
            json={"patient_name": "Keep", "text": "murmur and aorta findings"},
            headers=auth(token),
        ).json()
        classified = client.post(
            f"/api/records/{record['record_id']}/classify",
            json={"model_id": "logreg"},
            headers=auth(token),
        ).json()

        reborn = TestClient(create_app(config))
        token2 = login(reborn, "doc", "pw123456")
        listed = reborn.get("/api/records", headers=auth(token2)).json()
        assert listed == [classified]

    def test_concurrent_classification_of_distinct_records(self, tmp_path, model_dir):
        directory, _ = model_dir
        config = ServiceConfig(
            store_dir=str(tmp_path / "store"),
            model_dir=str(directory),
            bootstrap_username="doc",
            bootstrap_password="pw123456",
        )
        client = TestClient(create_app(config))
        token = login(client, "doc", "pw123456")
        record_ids = [
            client.post(
                "/api/records",
                json={"patient_name": f"P{i}", "text": f"aorta murmur case {i}"},
                headers=auth(token),
            ).json()["record_id"]
            for i in range(6)
        ]

        def classify(record_id):
            response = client.post(
                f"/api/records/{record_id}/classify",
                json={"model_id": "logreg"},
                headers=auth(token),
            )
            assert response.status_code == 200

        threads = [threading.Thread(target=classify, args=(rid,)) for rid in record_ids]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        listed = client.get("/api/records", headers=auth(token)).json()
        assert len(listed) == 6
        for entry in listed:
            classification = entry["classification"]
            assert classification is not None
            assert classification["model_id"] == "logreg"
            assert sum(classification["probabilities"]) == pytest.approx(1.0, abs=1e-6)


class TestConfigAndStatic:
    def test_config_file_and_env_overrides(self, tmp_path, monkeypatch):
        path = tmp_path / "service.json"
        path.write_text(json.dumps({"store_dir": "s", "model_dir": "m", "port": 8100}))
        monkeypatch.setenv("MEDTRIAGE_PORT", "9200")
        monkeypatch.setenv("MEDTRIAGE_EXTRACTOR", "external")
        monkeypatch.setenv("MEDTRIAGE_TOKEN_TTL_HOURS", "1.5")
        config = ServiceConfig.from_file(path)
        assert config.port == 9200  # env beats file
        assert config.extractor == "external"
        assert config.token_ttl_hours == 1.5
        assert config.store_dir == "s"

    def test_static_dir_served_at_root(self, tmp_path, model_dir):
        directory, _ = model_dir
        static = tmp_path / "dist"
        static.mkdir()
        (static / "index.html").write_text("<html><body>dashboard shell</body></html>")
        config = ServiceConfig(
            store_dir=str(tmp_path / "store"),
            model_dir=str(directory),
            static_dir=str(static),
            bootstrap_username="doc",
            bootstrap_password="pw123456",
        )
        client = TestClient(create_app(config))
        response = client.get("/")
        assert response.status_code == 200
        assert "dashboard shell" in response.text
        # API routes are matched before the static mount
        assert client.get("/api/health").json()["status"] == "ok"


class TestExternalOcr:
    def test_image_round_trip_through_mock_endpoint(self, tmp_path, model_dir):
        directory, _ = model_dir

        def ocr_responder(request: httpx.Request) -> httpx.Response:
            assert request.content == b"fake-image-bytes"
            return httpx.Response(200, text="FINDINGS: gastritis. PLAN: diet.")

        extractor = ExternalOcrExtractor(
            "http://ocr.internal/extract",
            client=httpx.Client(transport=httpx.MockTransport(ocr_responder)),
        )
        config = ServiceConfig(
            store_dir=str(tmp_path / "store"),
            model_dir=str(directory),
            extractor="external",
            ocr_endpoint="http://ocr.internal/extract",
            bootstrap_username="doc",
            bootstrap_password="pw123456",
        )
        client = TestClient(create_app(config, extractor=extractor))
        token = login(client, "doc", "pw123456")
        record = client.post(
            "/api/records",
            json={
                "patient_name": "Ocr",
                "image_base64": base64.b64encode(b"fake-image-bytes").decode(),
            },
            headers=auth(token),
        ).json()
        assert record["raw_text"] == "FINDINGS: gastritis. PLAN: diet."
        assert record["findings_text"] == "gastritis."

    def test_failing_endpoint_does_not_persist(self, tmp_path, model_dir):
        directory, _ = model_dir

        def failing(request: httpx.Request) -> httpx.Response:
            return httpx.Response(500, text="boom")

        extractor = ExternalOcrExtractor(
            "http://ocr.internal/extract",
            client=httpx.Client(transport=httpx.MockTransport(failing)),
        )
        config = ServiceConfig(
            store_dir=str(tmp_path / "store"),
            model_dir=str(directory),
            extractor="external",
            ocr_endpoint="http://ocr.internal/extract",
            bootstrap_username="doc",
            bootstrap_password="pw123456",
        )
        client = TestClient(create_app(config, extractor=extractor))
        token = login(client, "doc", "pw123456")
        response = client.post(
            "/api/records",
            json={"patient_name": "Gone", "image_base64": base64.b64encode(b"x").decode()},
            headers=auth(token),
        )
        assert response.status_code == 422
        assert client.get("/api/records", headers=auth(token)).json() == []
