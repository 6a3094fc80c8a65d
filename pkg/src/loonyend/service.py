"""HTTP JSON facade over the solver, oracle and session machinery.

Endpoints:

* ``POST /analyze`` with ``{"position": "2*3+4+6L"}``: value, controlled
  value breakdown, advised open, rule and trace.  Positions with odd loops
  are evaluated by the oracle and flagged ``"oracleFallback": true``
  (HTTP 422 above the oracle size cap).  An optional ``"open"`` token adds
  ``"moveValue"`` for that hypothetical open, so clients can preview
  what-if moves without running any engine logic themselves.
* ``POST /session`` / ``POST /session/{id}/open`` /
  ``POST /session/{id}/decide`` / ``GET /session/{id}``: turn-by-turn play
  with fresh advice in every response.

Sessions live in memory, expire after an idle TTL and are serialised by a
per-session lock; ids are never reused within a process.  Component
references use the grammar token (``"3"``, ``"6L"``) with ``#k`` suffixes
to distinguish duplicates in listings.  CORS is open to the origin named
by ``ENDGAME_CORS_ORIGIN`` (default ``*``).
"""

from __future__ import annotations

import itertools
import os
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import solver
from .analysis import OracleSizeError, analyze_game, move_value_for
from .oracle import SEARCH_BOX_CAP
from .model import (
    Component,
    ComponentNotPresentError,
    ControlChoice,
    Endgame,
    EndgameError,
    Player,
    component_from_token,
    format_position,
    parse_position,
)
from .session import (
    IllegalPhaseError,
    Phase,
    SessionState,
    advise,
    apply_decision,
    apply_open,
    new_session,
)

DEFAULT_SESSION_TTL_SECONDS = 24 * 60 * 60

ERROR_SCHEMA = {
    "type": "object",
    "required": ["error", "detail"],
    "properties": {"error": {"type": "string"}, "detail": {"type": "string"}},
    "additionalProperties": False,
}

ANALYZE_SCHEMA = {
    "type": "object",
    "required": ["position", "value", "cv", "fcv", "tb", "advisedOpen", "rule", "trace"],
    "properties": {
        "position": {"type": "string"},
        "value": {"type": "integer", "minimum": 0},
        "cv": {"type": "integer"},
        "fcv": {"type": "integer"},
        "tb": {"enum": [0, 4, 6, 8]},
        "advisedOpen": {"type": ["string", "null"]},
        "rule": {"type": ["string", "null"]},
        "trace": {"type": "array", "items": {"type": "string"}},
        "oracleFallback": {"type": "boolean"},
        "moveValue": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

_ADVICE_SCHEMA = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "required": ["kind", "component", "moveValue", "rule"],
            "properties": {
                "kind": {"const": "open"},
                "component": {"type": "string"},
                "moveValue": {"type": "integer"},
                "rule": {"type": "string"},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["kind", "choice", "indifferent"],
            "properties": {
                "kind": {"const": "decision"},
                "choice": {"enum": ["KeepControl", "TakeAll"]},
                "indifferent": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    ]
}

SESSION_SCHEMA = {
    "type": "object",
    "required": [
        "id", "phase", "position", "remaining", "opened", "scoreA", "scoreB",
        "toAct", "terminal", "totalBoxes", "history", "advice",
    ],
    "properties": {
        "id": {"type": "string"},
        "phase": {"enum": [Phase.DEFENDER_TO_OPEN.value, Phase.CONTROLLER_TO_DECIDE.value]},
        "position": {"type": "string"},
        "remaining": {"type": "array", "items": {"type": "string"}},
        "opened": {"type": ["string", "null"]},
        "scoreA": {"type": "integer", "minimum": 0},
        "scoreB": {"type": "integer", "minimum": 0},
        "toAct": {"enum": ["A", "B"]},
        "terminal": {"type": "boolean"},
        "totalBoxes": {"type": "integer", "minimum": 0},
        "history": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["actor", "action", "scoreADelta", "scoreBDelta"],
                "properties": {
                    "actor": {"enum": ["A", "B"]},
                    "action": {"type": "string"},
                    "scoreADelta": {"type": "integer"},
                    "scoreBDelta": {"type": "integer"},
                },
                "additionalProperties": False,
            },
        },
        "advice": _ADVICE_SCHEMA,
        "oracleFallback": {"type": "boolean"},
    },
    "additionalProperties": False,
}


@dataclass
class _SessionEntry:
    state: SessionState
    lock: threading.Lock = field(default_factory=threading.Lock)
    touched: float = field(default_factory=time.monotonic)


class SessionStore:
    """In-memory sessions with monotonic ids and idle expiry."""

    def __init__(self, ttl_seconds: float = DEFAULT_SESSION_TTL_SECONDS):
        self._ttl = ttl_seconds
        self._entries: dict[str, _SessionEntry] = {}
        self._ids = itertools.count(1)
        self._lock = threading.Lock()

    def create(self, state: SessionState) -> str:
        with self._lock:
            self._purge()
            session_id = f"s{next(self._ids)}"
            self._entries[session_id] = _SessionEntry(state)
            return session_id

    def get(self, session_id: str) -> _SessionEntry | None:
        with self._lock:
            self._purge()
            entry = self._entries.get(session_id)
            if entry is not None:
                entry.touched = time.monotonic()
            return entry

    def _purge(self) -> None:
        deadline = time.monotonic() - self._ttl
        stale = [sid for sid, e in self._entries.items() if e.touched < deadline]
        for sid in stale:
            del self._entries[sid]


def _error(status: int, error: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "detail": detail})


def _component_token(token: object) -> Component:
    """Parse a JSON component reference, ignoring a ``#k`` duplicate index."""
    if not isinstance(token, str):
        raise EndgameError(f"component must be a string, got {token!r}")
    base = token.split("#", 1)[0]
    return component_from_token(base)


def _remaining_tokens(game: Endgame) -> list[str]:
    tokens: list[str] = []
    for component, count in game.runs:
        tokens.append(component.token)
        tokens.extend(f"{component.token}#{i}" for i in range(2, count + 1))
    return tokens


def _advice_json(state: SessionState) -> dict | None:
    if state.is_terminal:
        return None
    advice = advise(state)
    if isinstance(advice, solver.MoveAdvice):
        return {
            "kind": "open",
            "component": advice.open.token,
            "moveValue": advice.move_value,
            "rule": advice.rule,
        }
    return {
        "kind": "decision",
        "choice": advice.choice.value,
        "indifferent": advice.indifferent,
    }


def _session_json(session_id: str, state: SessionState) -> dict:
    record = {
        "id": session_id,
        "phase": state.phase.value,
        "position": format_position(state.remaining),
        "remaining": _remaining_tokens(state.remaining),
        "opened": state.opened.token if state.opened else None,
        "scoreA": state.score_a,
        "scoreB": state.score_b,
        "toAct": state.to_act.value,
        "terminal": state.is_terminal,
        "totalBoxes": state.total_boxes,
        "history": [
            {
                "actor": entry.actor.value,
                "action": entry.action,
                "scoreADelta": entry.score_a_delta,
                "scoreBDelta": entry.score_b_delta,
            }
            for entry in state.history
        ],
        "advice": _advice_json(state),
    }
    if not state.initial.is_simple:
        record["oracleFallback"] = True
    return record


async def _json_body(request: Request) -> dict | None:
    try:
        body = await request.json()
    except Exception:
        return None
    return body if isinstance(body, dict) else None


def create_app(session_ttl: float = DEFAULT_SESSION_TTL_SECONDS) -> FastAPI:
    app = FastAPI(title="loonyend", docs_url=None, redoc_url=None)
    origin = os.environ.get("ENDGAME_CORS_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(session_ttl)
    app.state.sessions = store

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/analyze")
    async def analyze(request: Request):
        body = await _json_body(request)
        if body is None or not isinstance(body.get("position"), str):
            return _error(400, "bad request", "body must be JSON with a string 'position'")
        try:
            game = parse_position(body["position"])
        except EndgameError as exc:
            return _error(400, "invalid position", str(exc))
        try:
            record = analyze_game(game)
            if "open" in body:
                component = _component_token(body["open"])
                if component not in game:
                    raise ComponentNotPresentError(
                        f"no {component.token} in position"
                    )
                record["moveValue"] = move_value_for(game, component)
        except OracleSizeError as exc:
            return _error(422, "position too large", str(exc))
        except EndgameError as exc:
            return _error(400, "invalid request", str(exc))
        return record

    @app.post("/session")
    async def create_session(request: Request):
        body = await _json_body(request)
        if body is None or not isinstance(body.get("position"), str):
            return _error(400, "bad request", "body must be JSON with a string 'position'")
        opener_token = body.get("opener", "A")
        if opener_token not in ("A", "B"):
            return _error(400, "bad request", "'opener' must be 'A' or 'B'")
        try:
            game = parse_position(body["position"])
        except EndgameError as exc:
            return _error(400, "invalid position", str(exc))
        if not game.is_simple and game.total_boxes > SEARCH_BOX_CAP:
            return _error(
                422, "position too large",
                "odd-loop sessions are capped by the oracle search size",
            )
        state = new_session(game, Player(opener_token))
        session_id = store.create(state)
        return _session_json(session_id, state)

    @app.get("/session/{session_id}")
    def get_session(session_id: str):
        entry = store.get(session_id)
        if entry is None:
            return _error(404, "unknown session", session_id)
        return _session_json(session_id, entry.state)

    @app.post("/session/{session_id}/open")
    async def open_component(session_id: str, request: Request):
        entry = store.get(session_id)
        if entry is None:
            return _error(404, "unknown session", session_id)
        body = await _json_body(request)
        if body is None or "component" not in body:
            return _error(400, "bad request", "body must be JSON with 'component'")
        try:
            component = _component_token(body["component"])
        except EndgameError as exc:
            return _error(400, "invalid component", str(exc))
        with entry.lock:
            try:
                entry.state = apply_open(entry.state, component)
            except (IllegalPhaseError, ComponentNotPresentError) as exc:
                return _error(409, "illegal action", str(exc))
            return _session_json(session_id, entry.state)

    @app.post("/session/{session_id}/decide")
    async def decide(session_id: str, request: Request):
        entry = store.get(session_id)
        if entry is None:
            return _error(404, "unknown session", session_id)
        body = await _json_body(request)
        choices = {choice.value: choice for choice in ControlChoice}
        if body is None or body.get("choice") not in choices:
            return _error(
                400, "bad request",
                "body must be JSON with 'choice' of 'KeepControl' or 'TakeAll'",
            )
        with entry.lock:
            try:
                entry.state = apply_decision(entry.state, choices[body["choice"]])
            except IllegalPhaseError as exc:
                return _error(409, "illegal action", str(exc))
            return _session_json(session_id, entry.state)

    return app


app = create_app()
