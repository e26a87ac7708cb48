"""HTTP facade over the analysis engine.

Stateless JSON endpoints for the composer UI and platform bots; the
engine snapshot is immutable, so concurrent identical requests produce
byte-identical responses.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .corpus import ingest, scan_corpus
from .errors import CrsError, InputTooLarge
from .pipeline import MODES, EngineContext, analyze

MAX_BODY_BYTES = 64 * 1024


@dataclass
class ServiceConfig:
    addr: str = "127.0.0.1:8080"
    mode: str = "sensitive"
    ruleset: str | None = None
    model: str | None = None
    multilabel_model: str | None = None
    tox_lexicon: str | None = None
    valence_lexicon: str | None = None
    thesaurus: str | None = None
    remote_scorer_url: str | None = None
    remote_scorer_key: str | None = None
    rewriter_url: str | None = None
    cors_origin: str = "*"
    max_body: int = MAX_BODY_BYTES

    @classmethod
    def load(cls, path=None) -> "ServiceConfig":
        """Config file (JSON) overridden by CRS_* environment variables."""
        doc = {}
        if path:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        cfg = cls(**{k: v for k, v in doc.items() if k in cls.__dataclass_fields__})
        env_map = {
            "CRS_ADDR": "addr", "CRS_MODE": "mode", "CRS_RULESET": "ruleset",
            "CRS_MODEL": "model", "CRS_MULTILABEL_MODEL": "multilabel_model",
            "CRS_TOX_LEXICON": "tox_lexicon",
            "CRS_VALENCE_LEXICON": "valence_lexicon",
            "CRS_THESAURUS": "thesaurus",
            "CRS_REMOTE_SCORER_URL": "remote_scorer_url",
            "CRS_REMOTE_SCORER_KEY": "remote_scorer_key",
            "CRS_REWRITER_URL": "rewriter_url",
            "CRS_CORS_ORIGIN": "cors_origin",
        }
        for env, attr in env_map.items():
            if env in os.environ:
                setattr(cfg, attr, os.environ[env])
        return cfg


def _json_response(payload, status: int = 200) -> Response:
    # deterministic serialization: sorted keys, no per-request variance
    body = json.dumps(payload, sort_keys=True, ensure_ascii=False)
    return Response(content=body, status_code=status,
                    media_type="application/json")


def _error(status: int, message: str) -> Response:
    return _json_response({"error": message}, status=status)


def create_app(engine: EngineContext, cors_origin: str = "*",
               max_body: int = MAX_BODY_BYTES) -> FastAPI:
    app = FastAPI(title="crs", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin] if cors_origin != "*" else ["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    app.state.engine = engine

    def _parse_text_request(raw: bytes):
        """Returns (text, mode, error_response)."""
        if len(raw) > max_body:
            return None, None, _error(413, "request body too large")
        try:
            doc = json.loads(raw)
            if not isinstance(doc, dict) or not isinstance(doc.get("text"), str):
                raise ValueError("body must be a JSON object with a string 'text'")
        except (ValueError, UnicodeDecodeError) as exc:
            return None, None, _error(400, f"malformed request: {exc}")
        mode = doc.get("mode")
        if mode is not None and mode not in MODES:
            return None, None, _error(422, f"invalid mode {mode!r}")
        if len(doc["text"].encode("utf-8")) > max_body:
            return None, None, _error(413, "text too large")
        return doc["text"], mode, None

    @app.get("/v1/health")
    def health():
        eng = app.state.engine
        if eng is None:
            return _error(503, "engine not loaded")
        return _json_response({"status": "ok", "versions": eng.version_info()})

    @app.post("/v1/analyze")
    async def analyze_endpoint(request: Request):
        text, mode, err = _parse_text_request(await request.body())
        if err is not None:
            return err
        try:
            report = analyze(text, app.state.engine, mode=mode)
        except InputTooLarge as exc:
            return _error(413, str(exc))
        except CrsError as exc:
            return _error(500, str(exc))
        payload = report.to_dict()
        # timings vary per request; drop them so identical requests get
        # byte-identical responses
        payload.pop("timing_ms", None)
        return _json_response(payload)

    @app.post("/v1/paraphrase")
    async def paraphrase_endpoint(request: Request):
        text, mode, err = _parse_text_request(await request.body())
        if err is not None:
            return err
        try:
            report = analyze(text, app.state.engine, mode=mode)
        except InputTooLarge as exc:
            return _error(413, str(exc))
        if report.verdict != "offensive":
            return _error(409, "no offence found")
        return _json_response(
            {"suggestions": [s.to_dict() for s in report.suggestions]})

    @app.post("/v1/batch")
    async def batch_endpoint(request: Request):
        raw = await request.body()
        reader = ingest(io.BytesIO(raw), "jsonl")
        stats, _export = scan_corpus(reader, app.state.engine)
        return _json_response(stats.to_dict())

    return app
