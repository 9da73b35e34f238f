"""HTTP facade over the engine.

Endpoints (all JSON unless noted):

    POST /api/session                multipart upload: "data" (CSV), "config"
                                     (YAML) -> {"id": ...}
    GET  /api/session/{id}/wmsd      per-alternative WM/WSD points
    GET  /api/session/{id}/boundary  region boundary polyline and vertices
    GET  /api/session/{id}/epsilon-limit?kind=I|A|R
    POST /api/session/{id}/rank      {"spec": {...}, "tolerance": optional}
    POST /api/session/{id}/field     {"spec": {...}, "resolution": [nx, ny],
                                      "unclipped": bool, "encoding":
                                      "b64" | "plain"}
    POST /api/session/{id}/check-property  {"spec": {...}, "resolution": int}

Spec mapping keys: family (classic | elliptic | M | lex), kind, epsilon
or theta, lex variant, p, force.

Status codes: 404 unknown session, 422 invalid semantics (including
epsilon at or below the limit without force; the payload carries the
limit), 400 malformed uploads or JSON.

Sessions live in memory with LRU eviction; every response is a pure
function of (dataset, config, request), so identical requests return
byte-identical bodies.
"""

from __future__ import annotations

import base64
import math
import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np
from fastapi import FastAPI, File, Request, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .aggregations import (
    AggregationSpec,
    KINDS,
    check_minmax_property,
    epsilon_limit,
)
from .config import (
    EvaluatedDataset,
    ProjectConfig,
    evaluate_dataset,
    load_config,
    mode_scores,
    spec_from_mapping,
)
from .dataio import parse_dataset
from .errors import (
    DomainViolation,
    EpsilonBelowLimit,
    ParseError,
    ValidationError,
    WmsdrankError,
)
from .geometry import SpaceModel, scalar_field
from .lexicographic import LexSpec
from .model import DecisionMatrix
from .ranking import rank as rank_scores

DEFAULT_CAPACITY = 64
DEFAULT_RESOLUTION = (256, 256)


@dataclass(frozen=True, eq=False)
class Session:
    """Immutable snapshot of one uploaded dataset plus derived caches."""

    id: str
    dataset: DecisionMatrix
    config: ProjectConfig
    evaluated: EvaluatedDataset
    space: SpaceModel


class SessionStore:
    """Thread-safe LRU map of session id -> Session."""

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise DomainViolation("capacity must be positive")
        self._capacity = capacity
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()

    def put(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            self._sessions.move_to_end(session.id)
            while len(self._sessions) > self._capacity:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is not None:
                self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def _b64(arr: np.ndarray) -> str:
    return base64.b64encode(arr.tobytes()).decode("ascii")


def _spec_or_none(body: dict):
    spec_map = body.get("spec")
    if spec_map is None:
        raise DomainViolation("body needs a 'spec' mapping")
    return spec_from_mapping(spec_map)


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception as exc:
        raise ParseError(f"malformed JSON body: {exc}") from exc
    if not isinstance(body, dict):
        raise ParseError("JSON body must be an object")
    return body


def create_app(capacity: int = DEFAULT_CAPACITY) -> FastAPI:
    app = FastAPI(title="wmsdrank service", docs_url=None, redoc_url=None)
    # the browser explorer is served as static files from any origin;
    # the API holds no credentials, so a blanket allow is safe here
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store = SessionStore(capacity)

    @app.exception_handler(RequestValidationError)
    async def _on_bad_request(request, exc):
        return JSONResponse(status_code=400, content={
            "error": "MalformedBody", "detail": str(exc)})

    @app.exception_handler(ParseError)
    async def _on_parse_error(request, exc: ParseError):
        return JSONResponse(status_code=400, content={
            "error": type(exc).__name__, "detail": str(exc)})

    @app.exception_handler(EpsilonBelowLimit)
    async def _on_epsilon(request, exc: EpsilonBelowLimit):
        return JSONResponse(status_code=422, content={
            "error": "EpsilonBelowLimit", "detail": str(exc),
            "kind": exc.kind, "epsilon": exc.epsilon, "limit": exc.limit})

    @app.exception_handler(ValidationError)
    async def _on_validation(request, exc: ValidationError):
        return JSONResponse(status_code=422, content={
            "error": type(exc).__name__, "detail": str(exc)})

    @app.exception_handler(WmsdrankError)
    async def _on_other(request, exc: WmsdrankError):
        return JSONResponse(status_code=422, content={
            "error": type(exc).__name__, "detail": str(exc)})

    def _session_or_404(session_id: str) -> Session | JSONResponse:
        session = store.get(session_id)
        if session is None:
            return JSONResponse(status_code=404, content={
                "error": "UnknownSession", "detail": session_id})
        return session

    @app.post("/api/session")
    async def create_session(data: UploadFile = File(...),
                             config: UploadFile = File(...)):
        try:
            config_text = (await config.read()).decode("utf-8")
            csv_text = (await data.read()).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"upload is not UTF-8 text: {exc}") from exc
        cfg = load_config(config_text)
        dm = parse_dataset(csv_text, cfg)
        ev = evaluate_dataset(dm, cfg)
        space = SpaceModel.build(cfg.weights)
        session = Session(id=uuid.uuid4().hex, dataset=dm, config=cfg,
                          evaluated=ev, space=space)
        store.put(session)
        return {"id": session.id,
                "alternatives": len(dm.ids),
                "criteria": dm.n_criteria}

    @app.get("/api/session/{session_id}/wmsd")
    async def get_wmsd(session_id: str):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        ev = session.evaluated
        return {
            "mean_weight": session.config.weights.mean,
            "points": [
                {"id": ident, "wm": float(ev.wm[i]), "wsd": float(ev.wsd[i])}
                for i, ident in enumerate(ev.ids)
            ],
        }

    @app.get("/api/session/{session_id}/boundary")
    async def get_boundary(session_id: str):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        space = session.space
        return {
            "mean_weight": space.m,
            "polyline": [[p.wm, p.wsd] for p in space.boundary],
            "vertices": [[p.wm, p.wsd] for p in space.vertices],
        }

    @app.get("/api/session/{session_id}/epsilon-limit")
    async def get_epsilon_limit(session_id: str, kind: str = "I"):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        if kind not in KINDS:
            raise DomainViolation(f"kind must be one of {KINDS}")
        limit = epsilon_limit(kind, session.config.weights)
        unbounded = math.isinf(limit)
        return {"kind": kind,
                "limit": None if unbounded else limit,
                "unbounded": unbounded}

    @app.post("/api/session/{session_id}/rank")
    async def post_rank(session_id: str, request: Request):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        body = await _json_body(request)
        spec = _spec_or_none(body)
        spec.validate(session.config.weights)
        tolerance = float(body.get("tolerance",
                                   session.config.tolerance))
        ev = session.evaluated
        scores = mode_scores(ev, spec, session.config)
        ranked = rank_scores(scores, tolerance=tolerance)
        pt = {ident: (float(ev.wm[i]), float(ev.wsd[i]))
              for i, ident in enumerate(ev.ids)}
        entries = []
        for e in ranked:
            wm, wsd = pt[e.id]
            score = list(e.score) if isinstance(e.score, tuple) else e.score
            entries.append({"id": e.id, "score": score,
                            "position": e.position, "wm": wm, "wsd": wsd})
        out = {"entries": entries,
               "tuple_scores": isinstance(spec, LexSpec)}
        if isinstance(spec, AggregationSpec) and spec.force \
                and spec.below_limit(session.config.weights):
            out["warning"] = ("epsilon at or below the operational limit; "
                              "the max/min location property does not hold")
        return out

    @app.post("/api/session/{session_id}/field")
    async def post_field(session_id: str, request: Request):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        body = await _json_body(request)
        spec = _spec_or_none(body)
        if isinstance(spec, LexSpec):
            raise DomainViolation(
                "field rendering needs a scalar aggregation spec")
        spec.validate(session.config.weights)
        res = body.get("resolution", list(DEFAULT_RESOLUTION))
        if isinstance(res, int):
            res = [res, res]
        if (not isinstance(res, (list, tuple))) or len(res) != 2:
            raise DomainViolation(
                "resolution must be an integer or an [nx, ny] pair")
        nx, ny = int(res[0]), int(res[1])
        encoding = body.get("encoding", "b64")
        if encoding not in ("b64", "plain"):
            raise DomainViolation("encoding must be 'b64' or 'plain'")
        space = session.space
        window = (0.0, space.m, 0.0, max(space.wsd_max, 1e-6) * 1.05)
        fld = scalar_field(spec, session.config.weights, window=window,
                           resolution=(nx, ny), model=space)
        unclipped = bool(body.get("unclipped", False))
        values = fld.values
        if not unclipped:
            values = np.where(fld.mask, values, np.nan)
        out = {
            "window": list(fld.window),
            "resolution": [fld.nx, fld.ny],
            "order": "row-major",
        }
        if encoding == "b64":
            out["dtype"] = "float32"
            out["values_b64"] = _b64(values.astype(np.float32))
            out["mask_b64"] = _b64(fld.mask.astype(np.uint8))
        else:
            safe = np.where(np.isnan(values), None, values)
            out["values"] = [
                [None if v is None else float(v) for v in row]
                for row in safe.tolist()
            ]
            out["mask"] = fld.mask.astype(int).tolist()
        return out

    @app.post("/api/session/{session_id}/check-property")
    async def post_check_property(session_id: str, request: Request):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        body = await _json_body(request)
        spec = _spec_or_none(body)
        if not isinstance(spec, AggregationSpec) \
                or spec.family != "elliptic":
            raise DomainViolation(
                "check-property needs an elliptic aggregation spec")
        resolution = int(body.get("resolution", 256))
        report = check_minmax_property(spec, session.config.weights,
                                       resolution=resolution)
        return {
            "satisfied": report.satisfied,
            "minimum": report.minimum,
            "maximum": report.maximum,
            "argmin": [[p.wm, p.wsd] for p in report.argmin],
            "argmax": [[p.wm, p.wsd] for p in report.argmax],
            "resolution": report.resolution,
        }

    return app


app = create_app()
