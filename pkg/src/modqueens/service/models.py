"""Request and response shapes for the HTTP game service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CreateGameRequest(BaseModel):
    n: int
    variant: str = "standard"
    k: int = 2
    seed: Optional[List[int]] = None
    mode: str = "hotseat"


class MoveRequest(BaseModel):
    """One move; action defaults to whatever the variant's moves do."""
    row: int
    col: int
    action: Optional[str] = None


class HistoryEntry(BaseModel):
    action: str
    row: int
    col: int


class GameState(BaseModel):
    """Full position snapshot; square_status mirrors legal play, so a
    client needs no rule knowledge of its own."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    mode: str
    n: int
    variant: str
    k: int
    seed: Optional[List[int]]
    occupancy: List[List[int]]
    square_status: List[List[str]]
    board_class: str = Field(alias="class")
    to_move: int
    game_over: bool
    loser: Optional[int]
    history: List[HistoryEntry]
    legal_moves: List[List[int]]
    engine_move: Optional[HistoryEntry] = None


class GameSummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    n: int
    variant: str
    mode: str
    queens: int
    board_class: str = Field(alias="class")
    game_over: bool


class ErrorBody(BaseModel):
    error: str
    message: str
