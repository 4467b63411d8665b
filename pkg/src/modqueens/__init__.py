"""Engine, solver, and play environment for the mod-2 n-queens game."""

from .board import (
    Board,
    BoardClass,
    GameVariant,
    IllegalMoveError,
    Move,
    MoveAction,
    Square,
    Symmetry,
    VariantKind,
    board_state_dict,
    canonicalize,
    dump_board,
    new_board,
    parity_map,
    parse_board,
    place,
    remove,
    transform,
)
from .records import GameRecord, dump_record, parse_record, record_of, replay

__version__ = "0.1.0"
