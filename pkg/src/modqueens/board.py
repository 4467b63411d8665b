"""Board state and rules for the mod-k queens placement game.

A queen attacks every square in its row, column, and both diagonals,
at any distance and through other queens; it does not attack its own
square.  An empty square is open when the number of queens attacking
it is divisible by k (k = 2 in the base game).  Players alternate
placing queens on open squares, and whoever has no legal move loses.

Two variants share the same machinery.  The alternate-universe game
starts with one seed queen already on the board and allows placements
only on squares attacked an odd number of times.  The complementary
game starts from a full board with the seed queen removed, and a move
removes a queen attacked by an even number of the remaining queens.

Coordinates are 1-based (row, col) with row 1 at the top.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, NamedTuple, Optional


class Square(NamedTuple):
    row: int
    col: int


class VariantKind(enum.Enum):
    STANDARD = "standard"
    ALTERNATE = "alternate-universe"
    COMPLEMENTARY = "complementary"


@dataclass(frozen=True)
class GameVariant:
    """Rule-set selector: which game is being played, with its modulus and seed."""

    kind: VariantKind = VariantKind.STANDARD
    modulus: int = 2
    seed: Optional[Square] = None

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if self.kind is VariantKind.STANDARD:
            if self.seed is not None:
                raise ValueError("standard games take no seed square")
        else:
            if self.seed is None:
                raise ValueError(f"{self.kind.value} games need a seed square")
            if self.modulus != 2:
                raise ValueError(f"{self.kind.value} games are defined mod 2 only")
        if self.seed is not None and not isinstance(self.seed, Square):
            object.__setattr__(self, "seed", Square(*self.seed))

    @staticmethod
    def standard(modulus: int = 2) -> "GameVariant":
        return GameVariant(VariantKind.STANDARD, modulus)

    @staticmethod
    def alternate(seed: Iterable[int]) -> "GameVariant":
        return GameVariant(VariantKind.ALTERNATE, 2, Square(*seed))

    @staticmethod
    def complementary(seed: Iterable[int]) -> "GameVariant":
        return GameVariant(VariantKind.COMPLEMENTARY, 2, Square(*seed))


class MoveAction(enum.Enum):
    PLACE = "P"
    REMOVE = "R"


@dataclass(frozen=True)
class Move:
    action: MoveAction
    at: Square

    def __post_init__(self):
        if not isinstance(self.at, Square):
            object.__setattr__(self, "at", Square(*self.at))


def place(row: int, col: int) -> Move:
    return Move(MoveAction.PLACE, Square(row, col))


def remove(row: int, col: int) -> Move:
    return Move(MoveAction.REMOVE, Square(row, col))


class BoardClass(enum.Enum):
    COMPLETE = "complete"
    LOCKED = "locked"
    UNLOCKED = "unlocked"


class IllegalMoveError(ValueError):
    """A move or undo that breaks the rules; ``rule`` names the violation."""

    def __init__(self, rule: str, message: str):
        super().__init__(message)
        self.rule = rule


class Board:
    """Mutable game position with O(1) attacker queries.

    Four line counters (rows, columns, sum diagonals indexed by r+c,
    difference diagonals indexed by r-c) are kept in sync with the
    occupancy set, so an attacker count is a four-term sum rather
    than a board scan.  apply_move and undo_move adjust the counters
    incrementally and are exact inverses of each other.
    """

    __slots__ = ("n", "variant", "_occ", "_rows", "_cols", "_sums", "_diffs",
                 "_history")

    def __init__(self, n: int, variant: Optional[GameVariant] = None):
        variant = variant if variant is not None else GameVariant()
        self._init_empty(n, variant)
        if variant.kind is VariantKind.ALTERNATE:
            self._add(variant.seed)
        elif variant.kind is VariantKind.COMPLEMENTARY:
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    if Square(r, c) != variant.seed:
                        self._add(Square(r, c))

    def _init_empty(self, n: int, variant: GameVariant) -> None:
        if n < 1:
            raise ValueError(f"board size must be at least 1, got {n}")
        if variant.seed is not None:
            sr, sc = variant.seed
            if not (1 <= sr <= n and 1 <= sc <= n):
                raise ValueError(f"seed square {(sr, sc)} is off the {n}x{n} board")
        self.n = n
        self.variant = variant
        self._occ: set[Square] = set()
        self._rows = [0] * (n + 1)
        self._cols = [0] * (n + 1)
        self._sums = [0] * (2 * n + 1)
        self._diffs = [0] * (2 * n - 1)
        self._history: list[Move] = []

    @classmethod
    def _from_position(cls, n: int, variant: GameVariant,
                       occupied: Iterable[Square],
                       history: Iterable[Move] = ()) -> "Board":
        """Build a board at an arbitrary position, bypassing move legality."""
        board = cls.__new__(cls)
        board._init_empty(n, variant)
        for s in occupied:
            board._add(Square(*s))
        board._history = list(history)
        return board

    # -- state queries ---------------------------------------------------

    @property
    def occupied(self) -> frozenset:
        return frozenset(self._occ)

    @property
    def queens(self) -> int:
        return len(self._occ)

    @property
    def history(self) -> tuple:
        return tuple(self._history)

    def in_range(self, s: Square) -> bool:
        return 1 <= s.row <= self.n and 1 <= s.col <= self.n

    def is_occupied(self, s: Square) -> bool:
        return s in self._occ

    def attackers(self, s: Square) -> int:
        """Number of queens attacking s.  A queen never attacks itself."""
        r, c = s
        count = (self._rows[r] + self._cols[c] + self._sums[r + c]
                 + self._diffs[r - c + self.n - 1])
        if s in self._occ:
            count -= 4
        return count

    def open_square(self, s: Square) -> bool:
        """Whether an empty square shows as open under this variant's parity."""
        want = 1 if self.variant.kind is VariantKind.ALTERNATE else 0
        return self.attackers(s) % self.variant.modulus == want

    # -- moves -----------------------------------------------------------

    def _violation(self, move: Move) -> Optional[str]:
        s = move.at
        if not self.in_range(s):
            return "out-of-range"
        kind = self.variant.kind
        if move.action is MoveAction.PLACE:
            if kind is VariantKind.COMPLEMENTARY:
                return "wrong-action"
            if s in self._occ:
                return "occupied"
            want = 1 if kind is VariantKind.ALTERNATE else 0
            if self.attackers(s) % self.variant.modulus != want:
                return "closed"
        else:
            if kind is not VariantKind.COMPLEMENTARY:
                return "wrong-action"
            if s not in self._occ:
                return "not-occupied"
            if self.attackers(s) % 2 != 0:
                return "closed"
        return None

    def is_legal(self, move: Move) -> bool:
        return self._violation(move) is None

    def iter_legal_moves(self) -> Iterator[Move]:
        """Legal moves in row-major order of their target square."""
        action = (MoveAction.REMOVE
                  if self.variant.kind is VariantKind.COMPLEMENTARY
                  else MoveAction.PLACE)
        for r in range(1, self.n + 1):
            for c in range(1, self.n + 1):
                move = Move(action, Square(r, c))
                if self._violation(move) is None:
                    yield move

    def legal_moves(self) -> list:
        return list(self.iter_legal_moves())

    def apply_move(self, move: Move) -> None:
        rule = self._violation(move)
        if rule is not None:
            raise IllegalMoveError(rule, self._describe(move, rule))
        if move.action is MoveAction.PLACE:
            self._add(move.at)
        else:
            self._remove(move.at)
        self._history.append(move)

    def undo_move(self) -> Move:
        """Revert the most recent move, restoring caches bit for bit."""
        if not self._history:
            raise IllegalMoveError("empty-history", "no moves to undo")
        move = self._history.pop()
        if move.action is MoveAction.PLACE:
            self._remove(move.at)
        else:
            self._add(move.at)
        return move

    def _describe(self, move: Move, rule: str) -> str:
        s = move.at
        if rule == "out-of-range":
            return f"({s.row}, {s.col}) is off the {self.n}x{self.n} board"
        if rule == "wrong-action":
            verb = ("place on" if move.action is MoveAction.PLACE
                    else "remove from")
            return f"cannot {verb} squares in a {self.variant.kind.value} game"
        if rule == "occupied":
            return f"({s.row}, {s.col}) already holds a queen"
        if rule == "not-occupied":
            return f"({s.row}, {s.col}) holds no queen"
        return f"({s.row}, {s.col}) is closed: {self.attackers(s)} attackers"

    def _add(self, s: Square) -> None:
        self._occ.add(s)
        self._rows[s.row] += 1
        self._cols[s.col] += 1
        self._sums[s.row + s.col] += 1
        self._diffs[s.row - s.col + self.n - 1] += 1

    def _remove(self, s: Square) -> None:
        self._occ.remove(s)
        self._rows[s.row] -= 1
        self._cols[s.col] -= 1
        self._sums[s.row + s.col] -= 1
        self._diffs[s.row - s.col + self.n - 1] -= 1

    # -- classification --------------------------------------------------

    def classify(self) -> BoardClass:
        if self.variant.kind is VariantKind.COMPLEMENTARY:
            finished = not self._occ
        else:
            finished = len(self._occ) == self.n * self.n
        if finished:
            return BoardClass.COMPLETE
        if next(self.iter_legal_moves(), None) is None:
            return BoardClass.LOCKED
        return BoardClass.UNLOCKED

    def __repr__(self):
        return (f"Board(n={self.n}, variant={self.variant.kind.value}, "
                f"queens={len(self._occ)})")


def new_board(n: int, variant: Optional[GameVariant] = None) -> Board:
    return Board(n, variant)


def parity_map(board: Board):
    """Attacker-count residues for every empty square, None where a queen sits.

    Returns an n-row list of n-column lists in board order, using the
    board's modulus.
    """
    grid = []
    for r in range(1, board.n + 1):
        row = []
        for c in range(1, board.n + 1):
            s = Square(r, c)
            if board.is_occupied(s):
                row.append(None)
            else:
                row.append(board.attackers(s) % board.variant.modulus)
        grid.append(row)
    return grid


# -- dihedral symmetries -------------------------------------------------

class Symmetry(enum.Enum):
    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_H = "flip-h"
    FLIP_V = "flip-v"
    FLIP_MAIN = "flip-main"
    FLIP_ANTI = "flip-anti"

    def apply(self, s: Square, n: int) -> Square:
        """Image of s under this symmetry of the n x n board.

        Rotations are clockwise; flip-h mirrors left/right, flip-v
        top/bottom, flip-main reflects in the main diagonal and
        flip-anti in the antidiagonal.
        """
        r, c = s
        m = n + 1
        if self is Symmetry.IDENTITY:
            return s
        if self is Symmetry.ROT90:
            return Square(c, m - r)
        if self is Symmetry.ROT180:
            return Square(m - r, m - c)
        if self is Symmetry.ROT270:
            return Square(m - c, r)
        if self is Symmetry.FLIP_H:
            return Square(r, m - c)
        if self is Symmetry.FLIP_V:
            return Square(m - r, c)
        if self is Symmetry.FLIP_MAIN:
            return Square(c, r)
        return Square(m - c, m - r)


def transform(board: Board, sym: Symmetry) -> Board:
    """A new board with occupancy, history, and seed mapped through sym."""
    n = board.n
    variant = board.variant
    if variant.seed is not None:
        variant = replace(variant, seed=sym.apply(variant.seed, n))
    occupied = (sym.apply(s, n) for s in board.occupied)
    history = [Move(m.action, sym.apply(m.at, n)) for m in board.history]
    return Board._from_position(n, variant, occupied, history)


def occupancy_string(board: Board) -> str:
    """Row-major 0/1 occupancy string, the raw form behind canonical keys."""
    bits = []
    for r in range(1, board.n + 1):
        for c in range(1, board.n + 1):
            bits.append("1" if board.is_occupied(Square(r, c)) else "0")
    return "".join(bits)


def canonicalize(board: Board) -> str:
    """Lexicographically smallest occupancy string over all eight symmetries."""
    n = board.n
    best = None
    for sym in Symmetry:
        cells = ["0"] * (n * n)
        for s in board.occupied:
            tr, tc = sym.apply(s, n)
            cells[(tr - 1) * n + (tc - 1)] = "1"
        image = "".join(cells)
        if best is None or image < best:
            best = image
    return best


# -- text format ---------------------------------------------------------

def dump_board(board: Board) -> str:
    """Render a board as a header line plus one Q/./x row per rank.

    'Q' marks a queen, '.' an open empty square, 'x' a closed empty
    square, where open/closed follows the variant's placement parity.
    """
    header = (f"n={board.n} variant={board.variant.kind.value} "
              f"k={board.variant.modulus}")
    if board.variant.seed is not None:
        header += f" seed={board.variant.seed.row},{board.variant.seed.col}"
    lines = [header]
    for r in range(1, board.n + 1):
        row = []
        for c in range(1, board.n + 1):
            s = Square(r, c)
            if board.is_occupied(s):
                row.append("Q")
            elif board.open_square(s):
                row.append(".")
            else:
                row.append("x")
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def _parse_header(line: str):
    fields = {}
    for token in line.split():
        if "=" not in token:
            raise ValueError(f"bad header token {token!r}")
        key, value = token.split("=", 1)
        fields[key] = value
    for required in ("n", "variant", "k"):
        if required not in fields:
            raise ValueError(f"header is missing {required}=")
    try:
        n = int(fields["n"])
        modulus = int(fields["k"])
    except ValueError:
        raise ValueError("n= and k= must be integers") from None
    try:
        kind = VariantKind(fields["variant"])
    except ValueError:
        raise ValueError(f"unknown variant {fields['variant']!r}") from None
    seed = None
    if "seed" in fields:
        parts = fields["seed"].split(",")
        if len(parts) != 2:
            raise ValueError(f"bad seed {fields['seed']!r}, expected row,col")
        seed = Square(int(parts[0]), int(parts[1]))
    return n, GameVariant(kind, modulus, seed)


def parse_board(text: str) -> Board:
    """Inverse of dump_board.

    Occupancy comes from the 'Q' cells; '.' versus 'x' is derived data
    and is accepted either way.  Raises ValueError on malformed input.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty board text")
    n, variant = _parse_header(lines[0])
    grid = lines[1:]
    if len(grid) != n:
        raise ValueError(f"expected {n} board rows, got {len(grid)}")
    occupied = []
    for r, line in enumerate(grid, start=1):
        line = line.strip()
        if len(line) != n:
            raise ValueError(f"row {r} has {len(line)} cells, expected {n}")
        for c, ch in enumerate(line, start=1):
            if ch == "Q":
                occupied.append(Square(r, c))
            elif ch not in ".x":
                raise ValueError(f"bad cell {ch!r} at row {r}, column {c}")
    return Board._from_position(n, variant, occupied)


# -- wire view -----------------------------------------------------------

def board_state_dict(board: Board) -> dict:
    """Plain-data view of a position, the shared schema for reports and APIs.

    to_move counts from the move history (player 1 moves first), and
    the loser under normal play is whoever faces a finished board.
    """
    cls = board.classify()
    game_over = cls is not BoardClass.UNLOCKED
    to_move = 1 if len(board.history) % 2 == 0 else 2
    status = []
    for r in range(1, board.n + 1):
        row = []
        for c in range(1, board.n + 1):
            s = Square(r, c)
            if board.is_occupied(s):
                row.append("queen")
            elif board.open_square(s):
                row.append("open")
            else:
                row.append("closed")
        status.append(row)
    seed = board.variant.seed
    return {
        "n": board.n,
        "variant": board.variant.kind.value,
        "k": board.variant.modulus,
        "seed": [seed.row, seed.col] if seed is not None else None,
        "occupancy": [[s.row, s.col] for s in sorted(board.occupied)],
        "square_status": status,
        "class": cls.value,
        "to_move": to_move,
        "game_over": game_over,
        "loser": to_move if game_over else None,
        "history": [{"action": m.action.name.lower(),
                     "row": m.at.row, "col": m.at.col}
                    for m in board.history],
        "legal_moves": [[m.at.row, m.at.col] for m in board.iter_legal_moves()],
    }
