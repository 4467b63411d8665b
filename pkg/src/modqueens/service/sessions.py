"""In-memory game sessions with per-session locking.

Requests that touch one game serialize on that game's lock; the
registry lock only guards the id table, so games never block each
other.
"""

from __future__ import annotations

import threading
import uuid
from typing import List, Optional

from ..board import Board


class Session:
    __slots__ = ("id", "board", "mode", "lock", "logged")

    def __init__(self, board: Board, mode: str):
        self.id = uuid.uuid4().hex
        self.board = board
        self.mode = mode
        self.lock = threading.Lock()
        self.logged = False


class SessionStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict = {}

    def create(self, board: Board, mode: str) -> Session:
        session = Session(board, mode)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Optional[Session]:
        with self._lock:
            return self._sessions.get(session_id)

    def all(self) -> List[Session]:
        with self._lock:
            return list(self._sessions.values())
