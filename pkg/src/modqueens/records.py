"""Game records: a board size, a variant, and an ordered move list.

The text form is one header line (same fields as the board format)
followed by one move per line, 'P row col' for placements and
'R row col' for removals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .board import (Board, GameVariant, Move, MoveAction, Square,
                    _parse_header)


@dataclass(frozen=True)
class GameRecord:
    n: int
    variant: GameVariant
    moves: Tuple[Move, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"board size must be at least 1, got {self.n}")
        object.__setattr__(self, "moves", tuple(self.moves))


def dump_record(record: GameRecord) -> str:
    header = (f"n={record.n} variant={record.variant.kind.value} "
              f"k={record.variant.modulus}")
    if record.variant.seed is not None:
        seed = record.variant.seed
        header += f" seed={seed.row},{seed.col}"
    lines = [header]
    for move in record.moves:
        lines.append(f"{move.action.value} {move.at.row} {move.at.col}")
    return "\n".join(lines) + "\n"


def parse_record(text: str) -> GameRecord:
    """Inverse of dump_record; raises ValueError naming the offending line."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty record text")
    n, variant = _parse_header(lines[0])
    moves = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("P", "R"):
            raise ValueError(f"line {lineno}: expected 'P row col' or 'R row col'")
        try:
            row, col = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"line {lineno}: coordinates must be integers") from None
        moves.append(Move(MoveAction(parts[0]), Square(row, col)))
    return GameRecord(n, variant, tuple(moves))


def replay(record: GameRecord) -> Board:
    """Play a record through from the variant's initial board.

    Raises IllegalMoveError at the first illegal move; use
    constructions.verify_sequence when illegality should be reported
    as data instead.
    """
    board = Board(record.n, record.variant)
    for move in record.moves:
        board.apply_move(move)
    return board


def record_of(board: Board) -> GameRecord:
    """The record that reproduces a board played from its initial position."""
    return GameRecord(board.n, board.variant, board.history)
