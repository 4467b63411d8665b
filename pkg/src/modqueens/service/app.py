"""HTTP face of the game engine.

Thin layer over the board module: every response is built from
board_state_dict, so the wire format and the engine cannot drift
apart.  Sessions live in memory; pass log_dir to keep finished games
as record files, and static_dir to serve a built web client at /.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..board import (Board, BoardClass, GameVariant, IllegalMoveError, Move,
                     MoveAction, Square, VariantKind, board_state_dict)
from ..records import dump_record, record_of
from ..solver import choose_move
from .models import (CreateGameRequest, GameState, GameSummary, HistoryEntry,
                     MoveRequest)
from .sessions import Session, SessionStore

_MODES = ("hotseat", "engine")


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": code, "message": message})


def _state(session: Session, engine_move: Optional[Move] = None) -> GameState:
    payload = board_state_dict(session.board)
    payload["id"] = session.id
    payload["mode"] = session.mode
    if engine_move is not None:
        payload["engine_move"] = HistoryEntry(
            action=engine_move.action.name.lower(),
            row=engine_move.at.row, col=engine_move.at.col)
    return GameState(**payload)


def _summary(session: Session) -> GameSummary:
    board = session.board
    cls = board.classify()
    return GameSummary(id=session.id, n=board.n,
                       variant=board.variant.kind.value, mode=session.mode,
                       queens=board.queens,
                       **{"class": cls.value},
                       game_over=cls is not BoardClass.UNLOCKED)


def create_app(log_dir: Optional[str] = None,
               static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="mod-2 n-queens game service")
    store = SessionStore()
    app.state.store = store
    log_path = Path(log_dir) if log_dir else None

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError):
        return _error(400, "invalid-request", str(exc.errors()[:1]))

    def log_if_finished(session: Session) -> None:
        if log_path is None or session.logged:
            return
        if session.board.classify() is BoardClass.UNLOCKED:
            return
        log_path.mkdir(parents=True, exist_ok=True)
        target = log_path / f"{session.id}.rec"
        target.write_text(dump_record(record_of(session.board)))
        session.logged = True

    @app.post("/games", response_model=GameState, status_code=201)
    def create_game(request: CreateGameRequest):
        if request.mode not in _MODES:
            return _error(400, "invalid-parameter",
                          f"mode must be one of {', '.join(_MODES)}")
        try:
            kind = VariantKind(request.variant)
        except ValueError:
            return _error(400, "invalid-parameter",
                          f"unknown variant {request.variant!r}")
        seed = None
        if request.seed is not None:
            if len(request.seed) != 2:
                return _error(400, "invalid-parameter",
                              "seed must be [row, col]")
            seed = Square(*request.seed)
        try:
            variant = GameVariant(kind, request.k, seed)
            board = Board(request.n, variant)
        except ValueError as err:
            return _error(400, "invalid-parameter", str(err))
        session = store.create(board, request.mode)
        return _state(session)

    @app.get("/games")
    def list_games():
        return [_summary(session) for session in store.all()]

    @app.get("/games/{game_id}", response_model=GameState)
    def get_game(game_id: str):
        session = store.get(game_id)
        if session is None:
            return _error(404, "unknown-game", f"no game with id {game_id}")
        with session.lock:
            return _state(session)

    @app.post("/games/{game_id}/moves", response_model=GameState)
    def post_move(game_id: str, request: MoveRequest):
        session = store.get(game_id)
        if session is None:
            return _error(404, "unknown-game", f"no game with id {game_id}")
        with session.lock:
            board = session.board
            if request.action is None:
                action = (MoveAction.REMOVE
                          if board.variant.kind is VariantKind.COMPLEMENTARY
                          else MoveAction.PLACE)
            elif request.action in ("place", "remove"):
                action = (MoveAction.PLACE if request.action == "place"
                          else MoveAction.REMOVE)
            else:
                return _error(400, "invalid-parameter",
                              "action must be place or remove")
            move = Move(action, Square(request.row, request.col))
            try:
                board.apply_move(move)
            except IllegalMoveError as err:
                return _error(409, err.rule, str(err))
            engine_move = None
            if (session.mode == "engine"
                    and board.classify() is BoardClass.UNLOCKED):
                engine_move = choose_move(board)
                board.apply_move(engine_move)
            log_if_finished(session)
            return _state(session, engine_move)

    @app.post("/games/{game_id}/undo", response_model=GameState)
    def undo(game_id: str):
        session = store.get(game_id)
        if session is None:
            return _error(404, "unknown-game", f"no game with id {game_id}")
        with session.lock:
            board = session.board
            plies = 1
            if session.mode == "engine" and len(board.history) >= 2:
                # the engine answered the human's last move; take both back
                plies = 2 if len(board.history) % 2 == 0 else 1
            try:
                for _ in range(plies):
                    board.undo_move()
            except IllegalMoveError as err:
                return _error(409, err.rule, str(err))
            return _state(session)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="client")

    return app
