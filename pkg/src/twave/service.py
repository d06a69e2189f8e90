"""HTTP analysis service: stateless solve/convert plus stateful play
sessions, JSON over HTTP.

Sessions live in memory behind an LRU (default 1024); each holds the
current position and the full move history, so replaying the history from
the initial position always reproduces the current one.  Optionally every
accepted move is appended as a JSON line to a history log file.

Error bodies are always {"error": <code>, "detail": <text>}.
"""

from __future__ import annotations

import json
import os
import random
import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Optional

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .documents import (
    RULESET_IDS,
    ParseError,
    ValidationError,
    document_for,
    document_json,
    move_from_json,
    move_to_json,
    parse_position,
)
from .nimber import mex
from .reductions import InapplicableTransformer, convert_position
from .rulesets import options
from .solver import BudgetExceeded, SolveBudget, grundy


class ApiError(Exception):
    def __init__(self, status: int, code: str, detail: str,
                 extra: Optional[dict] = None):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail
        self.extra = extra or {}


@dataclass
class Session:
    id: str
    ruleset: str
    initial: Any
    current: Any
    history: list = field(default_factory=list)
    created_at: float = field(default_factory=time.time)
    analysis_budget: SolveBudget = field(default_factory=SolveBudget)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """LRU-evicting session map, safe for concurrent request handling."""

    def __init__(self, max_sessions: int = 1024):
        self.max_sessions = max_sessions
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self.max_sessions:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown-session",
                               f"no session {session_id!r}")
            self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def _parse_budget(raw) -> SolveBudget:
    if raw is None:
        return SolveBudget()
    if not isinstance(raw, dict):
        raise ApiError(400, "validation-error", "analysis_budget must be an object")
    kwargs = {}
    for src, dst in (("max_nodes", "max_nodes"),
                     ("max_memo_entries", "max_memo_entries")):
        if src in raw:
            value = raw[src]
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ApiError(400, "validation-error",
                               f"analysis_budget.{src} must be a positive integer")
            kwargs[dst] = value
    return SolveBudget(**kwargs)


def _parse_position_field(ruleset: str, position) -> Any:
    """Accept a payload object, a full document, or a literal string."""
    if isinstance(position, str):
        text = position
    elif isinstance(position, dict):
        body = dict(position)
        if body.get("ruleset", ruleset) != ruleset:
            raise ApiError(400, "validation-error",
                           "position document names a different ruleset")
        body["ruleset"] = ruleset
        body.setdefault("version", 1)
        text = json.dumps(body)
    else:
        raise ApiError(400, "validation-error", "position must be an object or string")
    try:
        doc = parse_position(text)
    except (ParseError, ValidationError) as exc:
        raise ApiError(400, "validation-error", str(exc)) from None
    if doc.ruleset != ruleset:
        raise ApiError(400, "validation-error",
                       "literal positions are transverse_wave only")
    return doc.payload


def _feasible_moves(ruleset: str, position) -> list:
    return [move_to_json(ruleset, m) for m, _ in sorted(options(position))]


def _state_body(session: Session) -> dict:
    feasible = _feasible_moves(session.ruleset, session.current)
    return {
        "position": document_json(document_for(session.current)),
        "feasible_moves": feasible,
        "game_over": not feasible,
        "winner_to_move_lost": not feasible,
    }


def create_app(max_sessions: int = 1024,
               history_log: Optional[str] = None,
               ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="twave analysis service")
    store = SessionStore(max_sessions)
    log_lock = threading.Lock()

    def log_history(session: Session, move_json) -> None:
        if history_log is None:
            return
        line = json.dumps({
            "session": session.id,
            "ruleset": session.ruleset,
            "move": move_json,
            "ts": time.time(),
        }, sort_keys=True)
        with log_lock:
            with open(history_log, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        body = {"error": exc.code, "detail": exc.detail}
        body.update(exc.extra)
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "validation-error", "detail": str(exc)},
        )

    @app.post("/sessions")
    def create_session(body: dict = Body(...)):
        ruleset = body.get("ruleset")
        if not isinstance(ruleset, str):
            raise ApiError(400, "validation-error", "ruleset field is required")
        if ruleset not in RULESET_IDS:
            raise ApiError(422, "unsupported-ruleset",
                           f"unsupported ruleset {ruleset!r}")
        if "position" not in body:
            raise ApiError(400, "validation-error", "position field is required")
        position = _parse_position_field(ruleset, body["position"])
        session = Session(
            id=secrets.token_hex(8),
            ruleset=ruleset,
            initial=position,
            current=position,
            analysis_budget=_parse_budget(body.get("analysis_budget")),
        )
        store.add(session)
        return {"id": session.id, "ruleset": ruleset, **_state_body(session)}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {
                "id": session.id,
                "ruleset": session.ruleset,
                "created_at": session.created_at,
                "initial_position": document_json(document_for(session.initial)),
                "history": [
                    {"move": m, "position": p} for m, p in session.history
                ],
                **_state_body(session),
            }

    def apply_move(session: Session, wanted) -> None:
        for move, successor in options(session.current):
            if move == wanted:
                session.current = successor
                move_json = move_to_json(session.ruleset, move)
                session.history.append(
                    (move_json, document_json(document_for(successor)))
                )
                log_history(session, move_json)
                return
        raise ApiError(409, "infeasible-move",
                       f"move {wanted!r} is not feasible")

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, body: dict = Body(...)):
        session = store.get(session_id)
        engine_reply = body.get("engine_reply", "none")
        if engine_reply not in ("optimal", "random", "none"):
            raise ApiError(400, "validation-error",
                           "engine_reply must be optimal, random or none")
        if "move" not in body:
            raise ApiError(400, "validation-error", "move field is required")
        try:
            wanted = move_from_json(session.ruleset, body["move"])
        except ValidationError as exc:
            raise ApiError(400, "validation-error", str(exc)) from None
        with session.lock:
            apply_move(session, wanted)
            engine_move = None
            feasible = sorted(options(session.current))
            if engine_reply != "none" and feasible:
                if engine_reply == "optimal":
                    try:
                        result = grundy(session.current,
                                        budget=session.analysis_budget)
                    except BudgetExceeded as exc:
                        raise ApiError(503, "budget-exceeded", str(exc)) from None
                    choice = (result.best_move if result.best_move is not None
                              else feasible[0][0])
                else:
                    rng = random.Random(body.get("seed", 0))
                    choice = rng.choice(feasible)[0]
                apply_move(session, choice)
                engine_move = move_to_json(session.ruleset, choice)
            return {**_state_body(session), "engine_move": engine_move}

    @app.get("/sessions/{session_id}/analysis")
    def get_analysis(session_id: str):
        session = store.get(session_id)
        with session.lock:
            ruleset = session.ruleset
            annotated = []
            child_values = []
            exhausted = False
            for move, successor in sorted(options(session.current)):
                entry = {"move": move_to_json(ruleset, move)}
                try:
                    res = grundy(successor, budget=session.analysis_budget)
                    entry["grundy"] = str(res.grundy)
                    entry["outcome"] = res.outcome.value
                    child_values.append(int(res.grundy))
                except BudgetExceeded:
                    entry["budget_exceeded"] = True
                    child_values.append(None)
                    exhausted = True
                annotated.append(entry)
            body = {"options": annotated}
            if exhausted:
                raise ApiError(503, "budget-exceeded",
                               "analysis budget exhausted; partial results",
                               extra={"partial": body})
            g = int(mex(child_values))
            best = None
            if g != 0:
                for entry, value in zip(annotated, child_values):
                    if value == 0:
                        best = entry["move"]
                        break
            body["grundy"] = f"*{g}"
            body["outcome"] = "N" if g else "P"
            body["best_move"] = best
            return body

    @app.post("/convert")
    def post_convert(body: dict = Body(...)):
        src = body.get("from_ruleset")
        dst = body.get("to_ruleset")
        if src not in RULESET_IDS:
            raise ApiError(422, "unsupported-ruleset",
                           f"unsupported source ruleset {src!r}")
        if dst not in RULESET_IDS:
            raise ApiError(422, "unsupported-ruleset",
                           f"unsupported target ruleset {dst!r}")
        if "position" not in body:
            raise ApiError(400, "validation-error", "position field is required")
        position = _parse_position_field(src, body["position"])
        try:
            converted, table = convert_position(position, src, dst)
        except InapplicableTransformer as exc:
            raise ApiError(422, "no-registered-transformer", str(exc)) from None
        bijection = None
        if table is not None:
            bijection = {
                json.dumps(move_to_json(src, m)): move_to_json(dst, img)
                for m, img in table.items()
            }
        return {
            "document": document_json(document_for(converted)),
            "move_bijection": bijection,
        }

    @app.post("/solve")
    def post_solve(body: dict = Body(...)):
        ruleset = body.get("ruleset")
        if not isinstance(ruleset, str) or ruleset not in RULESET_IDS:
            raise ApiError(422, "unsupported-ruleset",
                           f"unsupported ruleset {ruleset!r}")
        position = _parse_position_field(ruleset, body)
        try:
            result = grundy(position, budget=_parse_budget(body.get("budget")))
        except BudgetExceeded as exc:
            raise ApiError(503, "budget-exceeded", str(exc),
                           extra={"nodes": exc.nodes_expanded}) from None
        best = (None if result.best_move is None
                else move_to_json(ruleset, result.best_move))
        return {
            "grundy": str(result.grundy),
            "outcome": result.outcome.value,
            "best_move": best,
            "nodes": result.nodes_expanded,
        }

    if ui_dir and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


app = create_app(
    history_log=os.environ.get("TWAVE_HISTORY_LOG"),
    ui_dir=os.environ.get("TWAVE_UI_DIR"),
)
