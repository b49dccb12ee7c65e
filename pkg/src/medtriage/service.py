"""Authenticated HTTP classification service with file-backed patient
records.

Accounts use salted PBKDF2 hashes; sessions are opaque random bearer
tokens with a TTL, revocable by logout. Records persist through a
write-temp-then-rename store guarded by a single writer lock, so a
restart loses no data and concurrent classifications never interleave
partial writes. Text extraction is pluggable: the default pass-through
handles text payloads only, while the external mode posts image bytes to
a configured OCR endpoint.
"""

from __future__ import annotations

import base64
import hashlib
import hmac
import json
import os
import re
import secrets
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import httpx
from fastapi import Depends, FastAPI, Header, Query
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .artifacts import ModelArtifact
from .errors import (
    AuthenticationError,
    AuthorizationError,
    ExtractionError,
    MedTriageError,
    NotFoundError,
    UnclassifiableError,
    ValidationError,
)

PBKDF2_ITERATIONS = 100_000
ENV_PREFIX = "MEDTRIAGE_"

# The section header is either at the start of a line (any case, so
# "Findings:" works) or fully capitalized inline ("EXAM normal. FINDINGS:
# ..."). Plain prose mentioning "findings" must not trigger.
_FINDINGS_LINE = re.compile(r"^[ \t]*FINDINGS\b[ \t]*:?", re.IGNORECASE | re.MULTILINE)
_FINDINGS_INLINE = re.compile(r"\bFINDINGS\b[ \t]*:?")
# A later section starts at an all-caps word run followed by a colon, or a
# line consisting only of capitals.
_NEXT_HEADER = re.compile(r"\b[A-Z][A-Z ]{2,}\b\s*:|^[ \t]*[A-Z][A-Z ]{2,}[ \t]*$", re.MULTILINE)


@dataclass
class ServiceConfig:
    store_dir: str = "medtriage-store"
    model_dir: str = "models"
    host: str = "127.0.0.1"
    port: int = 8000
    token_ttl_hours: float = 24.0
    extractor: str = "passthrough"  # or "external"
    ocr_endpoint: str = ""
    static_dir: str = ""
    bootstrap_username: str = ""
    bootstrap_password: str = ""

    @classmethod
    def from_file(cls, path) -> "ServiceConfig":
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        config = cls(**data)
        return config.with_env_overrides()

    def with_env_overrides(self) -> "ServiceConfig":
        """Environment variables beat file values: MEDTRIAGE_<FIELD>."""
        for name in vars(self):
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            current = getattr(self, name)
            if isinstance(current, float):
                setattr(self, name, float(raw))
            elif isinstance(current, int):
                setattr(self, name, int(raw))
            else:
                setattr(self, name, raw)
        return self


def parse_findings(text: str) -> str:
    """Cut out the FINDINGS section: from the header (case-insensitive,
    optional colon) to the next all-caps header, else the whole text."""
    candidates = [m for m in (_FINDINGS_LINE.search(text), _FINDINGS_INLINE.search(text)) if m]
    if not candidates:
        return text
    match = min(candidates, key=lambda m: m.start())
    rest = text[match.end() :]
    nxt = _NEXT_HEADER.search(rest)
    section = rest if nxt is None else rest[: nxt.start()]
    return section.strip()


class PassThroughExtractor:
    """Default extractor: text goes through untouched, images are refused."""

    def extract(self, text: str | None, image_bytes: bytes | None) -> str:
        if text is not None:
            return text
        raise ExtractionError("pass-through extractor handles text payloads only")


class ExternalOcrExtractor:
    """Posts image bytes to a configured OCR endpoint that answers with
    plain text. Text payloads skip the round-trip."""

    def __init__(self, endpoint: str, client: httpx.Client | None = None):
        if not endpoint:
            raise ValidationError("external extractor requires an OCR endpoint URL")
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=30.0)

    def extract(self, text: str | None, image_bytes: bytes | None) -> str:
        if text is not None:
            return text
        if image_bytes is None:
            raise ExtractionError("no payload to extract")
        try:
            response = self._client.post(
                self.endpoint,
                content=image_bytes,
                headers={"content-type": "application/octet-stream"},
            )
            response.raise_for_status()
        except httpx.HTTPError as err:
            raise ExtractionError(f"OCR endpoint failed: {err}") from err
        return response.text


def make_extractor(config: ServiceConfig):
    if config.extractor == "external":
        return ExternalOcrExtractor(config.ocr_endpoint)
    if config.extractor == "passthrough":
        return PassThroughExtractor()
    raise ValidationError(f"unknown extractor mode {config.extractor!r}")


@dataclass
class PatientRecord:
    record_id: str
    patient_name: str
    created_at: str
    raw_text: str
    findings_text: str
    classification: dict | None = None

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "patient_name": self.patient_name,
            "created_at": self.created_at,
            "raw_text": self.raw_text,
            "findings_text": self.findings_text,
            "classification": self.classification,
        }


class RecordStore:
    """Patient records and user accounts on disk, atomic via
    write-temp-then-rename under a single writer lock."""

    def __init__(self, store_dir):
        self.dir = Path(store_dir)
        self.dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._records_path = self.dir / "records.json"
        self._users_path = self.dir / "users.json"
        self._records: dict[str, PatientRecord] = {}
        self._users: dict[str, dict] = {}
        self._next_id = 1
        self._load()

    def _load(self) -> None:
        if self._records_path.exists():
            data = json.loads(self._records_path.read_text(encoding="utf-8"))
            self._next_id = data["next_id"]
            self._records = {
                entry["record_id"]: PatientRecord(**entry) for entry in data["records"]
            }
        if self._users_path.exists():
            self._users = json.loads(self._users_path.read_text(encoding="utf-8"))

    @staticmethod
    def _atomic_write(path: Path, payload: dict) -> None:
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(json.dumps(payload, ensure_ascii=False, indent=2), encoding="utf-8")
        os.replace(tmp, path)

    def _flush_records(self) -> None:
        self._atomic_write(
            self._records_path,
            {
                "next_id": self._next_id,
                "records": [record.to_dict() for record in self._records.values()],
            },
        )

    # ---- users ----

    def add_user(self, username: str, password: str, role: str = "clinician") -> None:
        if role not in ("clinician", "admin"):
            raise ValidationError(f"unknown role {role!r}")
        salt = secrets.token_bytes(16)
        digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, PBKDF2_ITERATIONS)
        with self._lock:
            self._users[username] = {
                "salt": base64.b64encode(salt).decode("ascii"),
                "hash": base64.b64encode(digest).decode("ascii"),
                "role": role,
            }
            self._atomic_write(self._users_path, self._users)

    def verify_user(self, username: str, password: str) -> bool:
        entry = self._users.get(username)
        if entry is None:
            # burn the same work as a real check so timing stays flat
            hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), b"\0" * 16, PBKDF2_ITERATIONS)
            return False
        salt = base64.b64decode(entry["salt"])
        expected = base64.b64decode(entry["hash"])
        digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, PBKDF2_ITERATIONS)
        return hmac.compare_digest(digest, expected)

    def has_users(self) -> bool:
        return bool(self._users)

    # ---- records ----

    def add_record(self, patient_name: str, raw_text: str, findings_text: str) -> PatientRecord:
        with self._lock:
            record = PatientRecord(
                record_id=f"rec-{self._next_id:06d}",
                patient_name=patient_name,
                created_at=datetime.now(timezone.utc).isoformat(),
                raw_text=raw_text,
                findings_text=findings_text,
            )
            self._next_id += 1
            self._records[record.record_id] = record
            self._flush_records()
        return record

    def get(self, record_id: str) -> PatientRecord:
        record = self._records.get(record_id)
        if record is None:
            raise NotFoundError(f"no record {record_id!r}")
        return record

    def set_classification(self, record_id: str, classification: dict) -> PatientRecord:
        with self._lock:
            record = self.get(record_id)
            record.classification = classification
            self._flush_records()
            return record

    def list_records(self) -> list[PatientRecord]:
        return sorted(self._records.values(), key=lambda r: r.created_at, reverse=True)


class TokenTable:
    """In-memory session tokens; logout revokes, expiry is enforced on
    every lookup. Restarting the service logs everyone out."""

    def __init__(self, ttl_hours: float):
        self._ttl = ttl_hours * 3600.0
        self._tokens: dict[str, tuple[str, float]] = {}
        self._lock = threading.Lock()

    def issue(self, username: str) -> tuple[str, float]:
        token = secrets.token_hex(16)  # 128 bits
        expires = time.time() + self._ttl
        with self._lock:
            self._tokens[token] = (username, expires)
        return token, expires

    def username_for(self, token: str) -> str:
        with self._lock:
            entry = self._tokens.get(token)
            if entry is None:
                raise AuthorizationError("missing or revoked token")
            username, expires = entry
            if time.time() >= expires:
                del self._tokens[token]
                raise AuthorizationError("token expired")
            return username

    def revoke(self, token: str) -> None:
        with self._lock:
            self._tokens.pop(token, None)


class ModelRegistry:
    """Artifacts in the model directory, loaded lazily and cached."""

    def __init__(self, model_dir):
        self.dir = Path(model_dir)
        self._cache: dict[str, ModelArtifact] = {}
        self._lock = threading.Lock()

    def ids(self) -> list[str]:
        if not self.dir.is_dir():
            return []
        return sorted(
            path.stem
            for path in self.dir.glob("*.json")
            if not path.name.endswith(".manifest.json")
        )

    def describe(self) -> list[dict]:
        entries = []
        for model_id in self.ids():
            manifest_path = self.dir / f"{model_id}.manifest.json"
            architecture, trained_at, accuracy = None, None, None
            if manifest_path.exists():
                manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
                architecture = manifest.get("kind")
                trained_at = manifest.get("created_at")
                accuracy = manifest.get("test_accuracy")
            if architecture is None:
                architecture = self.load(model_id).kind
            entries.append(
                {
                    "model_id": model_id,
                    "architecture": architecture,
                    "trained_at": trained_at,
                    "test_accuracy": accuracy,
                }
            )
        return entries

    def load(self, model_id: str) -> ModelArtifact:
        with self._lock:
            if model_id not in self._cache:
                path = self.dir / f"{model_id}.json"
                if not path.exists():
                    raise NotFoundError(f"no model {model_id!r}")
                self._cache[model_id] = ModelArtifact.load(path)
            return self._cache[model_id]


class LoginRequest(BaseModel):
    username: str
    password: str


class CreateRecordRequest(BaseModel):
    patient_name: str
    text: str | None = None
    image_base64: str | None = None


class ClassifyRequest(BaseModel):
    model_id: str


_ERROR_STATUS = {
    AuthenticationError: (401, "authentication_failed"),
    AuthorizationError: (401, "authorization_required"),
    NotFoundError: (404, "not_found"),
    ValidationError: (422, "validation"),
    ExtractionError: (422, "extraction_failed"),
    UnclassifiableError: (422, "unclassifiable"),
}


def _parse_when(value: str, name: str) -> datetime:
    try:
        parsed = datetime.fromisoformat(value)
    except ValueError:
        raise ValidationError(f"invalid {name} date {value!r}") from None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed


def create_app(config: ServiceConfig, extractor=None, store: RecordStore | None = None) -> FastAPI:
    store = store or RecordStore(config.store_dir)
    tokens = TokenTable(config.token_ttl_hours)
    registry = ModelRegistry(config.model_dir)
    extractor = extractor or make_extractor(config)
    if config.bootstrap_username and not store.has_users():
        store.add_user(config.bootstrap_username, config.bootstrap_password, role="admin")

    app = FastAPI(title="medtriage", docs_url=None, redoc_url=None, openapi_url=None)

    def require_token(authorization: str | None = Header(default=None)) -> str:
        if not authorization or not authorization.startswith("Bearer "):
            raise AuthorizationError("missing bearer token")
        return tokens.username_for(authorization.removeprefix("Bearer "))

    @app.exception_handler(MedTriageError)
    async def on_domain_error(_, exc: MedTriageError):
        for klass, (status, code) in _ERROR_STATUS.items():
            if isinstance(exc, klass):
                return JSONResponse(
                    status_code=status, content={"error_code": code, "message": str(exc)}
                )
        return JSONResponse(
            status_code=500, content={"error_code": "internal", "message": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def on_request_error(_, exc: RequestValidationError):
        return JSONResponse(
            status_code=422, content={"error_code": "validation", "message": str(exc.errors())}
        )

    @app.post("/api/login")
    def login(body: LoginRequest):
        if not store.verify_user(body.username, body.password):
            raise AuthenticationError("invalid credentials")
        token, expires = tokens.issue(body.username)
        return {
            "token": token,
            "expires_at": datetime.fromtimestamp(expires, tz=timezone.utc).isoformat(),
        }

    @app.post("/api/logout")
    def logout(authorization: str | None = Header(default=None), _user: str = Depends(require_token)):
        tokens.revoke(authorization.removeprefix("Bearer "))
        return {}

    @app.post("/api/records")
    def create_record(body: CreateRecordRequest, _user: str = Depends(require_token)):
        if not body.patient_name.strip():
            raise ValidationError("patient_name must not be empty")
        image_bytes = None
        if body.image_base64 is not None:
            try:
                image_bytes = base64.b64decode(body.image_base64, validate=True)
            except Exception:
                raise ValidationError("image_base64 is not valid base64") from None
        if body.text is None and image_bytes is None:
            raise ValidationError("provide text or image_base64")
        raw_text = extractor.extract(body.text, image_bytes)
        if not raw_text.strip():
            raise ValidationError("extracted text is empty")
        record = store.add_record(
            patient_name=body.patient_name.strip(),
            raw_text=raw_text,
            findings_text=parse_findings(raw_text),
        )
        return record.to_dict()

    @app.get("/api/records")
    def list_records(
        category: str | None = None,
        q: str | None = None,
        date_from: str | None = Query(default=None, alias="from"),
        date_to: str | None = Query(default=None, alias="to"),
        _user: str = Depends(require_token),
    ):
        lower = _parse_when(date_from, "from") if date_from else None
        upper = _parse_when(date_to, "to") if date_to else None
        if lower and upper and lower > upper:
            raise ValidationError("date range is inverted")
        results = []
        for record in store.list_records():
            if category is not None:
                if record.classification is None:
                    continue
                if record.classification["label"] != category:
                    continue
            if q is not None and q.lower() not in record.patient_name.lower():
                continue
            created = datetime.fromisoformat(record.created_at)
            if lower and created < lower:
                continue
            if upper and created > upper:
                continue
            results.append(record.to_dict())
        return results

    @app.post("/api/records/{record_id}/classify")
    def classify_record(record_id: str, body: ClassifyRequest, _user: str = Depends(require_token)):
        record = store.get(record_id)
        artifact = registry.load(body.model_id)
        label, probs = artifact.classify(record.findings_text)
        updated = store.set_classification(
            record_id,
            {
                "label": label,
                "probabilities": [float(p) for p in probs],
                "model_id": body.model_id,
            },
        )
        return updated.to_dict()

    @app.get("/api/models")
    def list_models(_user: str = Depends(require_token)):
        return registry.describe()

    @app.get("/api/health")
    def health():
        return {"status": "ok", "model_loaded": bool(registry.ids())}

    if config.static_dir and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="dashboard")

    return app


def serve(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="info")
