"""Correspondences between the standard, alternate-universe, and
complementary games.

On even boards the alternate-universe game from a seed and the
complementary game from the same seed are the same game under the
move-for-move identity map on squares.  On odd boards the
complementary game from seed s matches the standard game whose first
placement is s, with each removal becoming the next placement of the
same square.  map_record rewrites records along these maps and
verify_bijection checks them wholesale by walking the source game
tree in lockstep with its image.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional

from .board import (Board, GameVariant, Move, MoveAction, Square, VariantKind)
from .records import GameRecord, record_of, replay


def complement_board(board: Board) -> Board:
    """Swap occupied and empty squares; an involution.

    The result keeps the size and variant but starts a fresh history,
    since the complemented position was not reached by play.
    """
    occupied = (Square(r, c)
                for r in range(1, board.n + 1)
                for c in range(1, board.n + 1)
                if not board.is_occupied(Square(r, c)))
    return Board._from_position(board.n, board.variant, occupied)


class MapDirection(enum.Enum):
    ALT_TO_COMP = "alternate-to-complementary"
    COMP_TO_ALT = "complementary-to-alternate"
    STD_TO_COMP = "standard-to-complementary"
    COMP_TO_STD = "complementary-to-standard"


_INVERSE = {
    MapDirection.ALT_TO_COMP: MapDirection.COMP_TO_ALT,
    MapDirection.COMP_TO_ALT: MapDirection.ALT_TO_COMP,
    MapDirection.STD_TO_COMP: MapDirection.COMP_TO_STD,
    MapDirection.COMP_TO_STD: MapDirection.STD_TO_COMP,
}

_EVEN_DIRECTIONS = {MapDirection.ALT_TO_COMP, MapDirection.COMP_TO_ALT}


def inverse_direction(direction: MapDirection) -> MapDirection:
    return _INVERSE[direction]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def map_record(record: GameRecord, direction: MapDirection) -> GameRecord:
    """Rewrite a legal record through one of the variant maps.

    The source record is replayed first, so an illegal source is
    rejected; whether the *image* replays legally is exactly the
    correspondence being claimed, and is left to verify_bijection.

    The even-board maps keep every move square and the move count.
    The odd-board maps exchange the complementary seed for the first
    standard placement, so the move count shifts by one.
    """
    n = record.n
    even = direction in _EVEN_DIRECTIONS
    _require(n % 2 == (0 if even else 1),
             f"{direction.value} map applies to {'even' if even else 'odd'} "
             f"boards, got n={n}")
    try:
        replay(record)
    except ValueError as err:
        raise ValueError(f"source record is not legal play: {err}") from None
    kind = record.variant.kind
    if direction is MapDirection.ALT_TO_COMP:
        _require(kind is VariantKind.ALTERNATE, "source must be alternate-universe")
        moves = tuple(Move(MoveAction.REMOVE, m.at) for m in record.moves)
        return GameRecord(n, GameVariant.complementary(record.variant.seed), moves)
    if direction is MapDirection.COMP_TO_ALT:
        _require(kind is VariantKind.COMPLEMENTARY, "source must be complementary")
        moves = tuple(Move(MoveAction.PLACE, m.at) for m in record.moves)
        return GameRecord(n, GameVariant.alternate(record.variant.seed), moves)
    if direction is MapDirection.COMP_TO_STD:
        _require(kind is VariantKind.COMPLEMENTARY, "source must be complementary")
        moves = (Move(MoveAction.PLACE, record.variant.seed),)
        moves += tuple(Move(MoveAction.PLACE, m.at) for m in record.moves)
        return GameRecord(n, GameVariant.standard(), moves)
    _require(kind is VariantKind.STANDARD, "source must be standard")
    _require(len(record.moves) >= 1,
             "an empty standard record has no complementary image")
    seed = record.moves[0].at
    moves = tuple(Move(MoveAction.REMOVE, m.at) for m in record.moves[1:])
    return GameRecord(n, GameVariant.complementary(seed), moves)


@dataclass
class BijectionFailure:
    record: GameRecord
    reason: str


@dataclass
class BijectionReport:
    """Tally from walking a source game tree against its image.

    records counts positions visited (per seed, merged when deduping),
    transitions counts source moves whose images were tested, and
    failures must be zero for the correspondence to hold.
    """
    n: int
    direction: MapDirection
    seeds: int
    records: int
    transitions: int
    failures: int
    examples: List[BijectionFailure] = field(default_factory=list)


_MAX_EXAMPLES = 5


def _source_setups(n: int, direction: MapDirection):
    """Initial (source, target) board pairs, one per seed choice."""
    squares = [Square(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    if direction is MapDirection.ALT_TO_COMP:
        for s in squares:
            yield (Board(n, GameVariant.alternate(s)),
                   Board(n, GameVariant.complementary(s)))
    elif direction is MapDirection.COMP_TO_ALT:
        for s in squares:
            yield (Board(n, GameVariant.complementary(s)),
                   Board(n, GameVariant.alternate(s)))
    elif direction is MapDirection.COMP_TO_STD:
        for s in squares:
            target = Board(n, GameVariant.standard())
            target.apply_move(Move(MoveAction.PLACE, s))
            yield (Board(n, GameVariant.complementary(s)), target)
    else:
        # Standard sources branch over the first placement instead of a
        # seed parameter; the pairing starts one ply in.
        for s in squares:
            source = Board(n, GameVariant.standard())
            source.apply_move(Move(MoveAction.PLACE, s))
            yield (source, Board(n, GameVariant.complementary(s)))


def _image_move(move: Move, direction: MapDirection) -> Move:
    if direction in (MapDirection.ALT_TO_COMP, MapDirection.STD_TO_COMP):
        return Move(MoveAction.REMOVE, move.at)
    return Move(MoveAction.PLACE, move.at)


def verify_bijection(n: int, direction: MapDirection,
                     depth_limit: Optional[int] = None,
                     dedup_states: bool = False) -> BijectionReport:
    """Walk every source game and check its image move for move.

    At each position the pending source move's image must be legal on
    the image board, and the full record through this position must
    survive a map there-and-back unchanged.  With dedup_states, each
    source occupancy is expanded once (move legality depends only on
    the occupancy, and the image position is always its complement, so
    revisits prove nothing new); depth_limit bounds the source moves
    explored past the setup.
    """
    even = direction in _EVEN_DIRECTIONS
    _require(n % 2 == (0 if even else 1),
             f"{direction.value} map applies to {'even' if even else 'odd'} "
             f"boards, got n={n}")
    report = BijectionReport(n, direction, 0, 0, 0, 0)

    def fail(source: Board, reason: str) -> None:
        report.failures += 1
        if len(report.examples) < _MAX_EXAMPLES:
            report.examples.append(BijectionFailure(record_of(source), reason))

    def roundtrip(source: Board) -> None:
        record = record_of(source)
        if direction is MapDirection.STD_TO_COMP and not record.moves:
            return
        try:
            image = map_record(record, direction)
            back = map_record(image, inverse_direction(direction))
        except ValueError as err:
            fail(source, f"map failed: {err}")
            return
        if back != record:
            fail(source, "round-trip changed the record")

    def walk(source: Board, target: Board, depth: int, seen) -> None:
        if seen is not None:
            key = frozenset(source.occupied)
            if key in seen:
                return
            seen.add(key)
        report.records += 1
        if source.queens + target.queens != n * n:
            fail(source, "image is not the complement position")
        roundtrip(source)
        if depth_limit is not None and depth >= depth_limit:
            return
        for move in source.legal_moves():
            image = _image_move(move, direction)
            report.transitions += 1
            if not target.is_legal(image):
                fail(source, f"image move {image.action.value} "
                             f"({image.at.row},{image.at.col}) is illegal")
                continue
            source.apply_move(move)
            target.apply_move(image)
            walk(source, target, depth + 1, seen)
            source.undo_move()
            target.undo_move()

    for source, target in _source_setups(n, direction):
        report.seeds += 1
        seen = set() if dedup_states else None
        walk(source, target, 0, seen)
    return report
