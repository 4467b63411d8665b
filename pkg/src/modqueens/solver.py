"""Exhaustive search over game positions.

Positions are packed into integers, one bit per square with (1,1) as
the most significant bit, so that numeric comparison agrees with
row-major lexicographic order on occupancy strings.  Attack sets are
precomputed masks, which makes move legality a popcount and a parity
test.  On top of that sit the win/loss solver, full-game enumeration,
reachable-state counts, locked-position search, and the canonical game
graph with DOT export.

Everything exhaustive is guarded by a size budget (n <= 4 by default)
because state counts grow like 2^(n^2); pass force=True to override.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .board import (Board, BoardClass, GameVariant, Move, MoveAction, Square,
                    Symmetry, VariantKind)
from .records import GameRecord

DEFAULT_BUDGET = 4


class BudgetError(RuntimeError):
    """An exhaustive operation was asked to exceed the size budget."""


def _check_budget(n: int, force: bool, op: str) -> None:
    if n > DEFAULT_BUDGET and not force:
        raise BudgetError(
            f"{op} at n={n} exceeds the default budget of n <= {DEFAULT_BUDGET}; "
            f"state counts grow like 2^(n^2), pass force to run anyway")


class Outcome(enum.Enum):
    WIN = "win"
    LOSS = "loss"


@dataclass
class SolveResult:
    value: Outcome
    best_move: Optional[Move]
    node_count: int


@dataclass
class EnumerationStats:
    """Counts over all complete games from the initial position.

    leaf_count is the number of maximal legal move sequences; the
    histogram maps game length to the number of games of that length.
    states_seen counts distinct positions encountered.  Symmetry only
    merges states for storage (states_seen shrinks to canonical
    positions); game counts are unaffected.  truncated counts
    sequences cut off by a depth limit; min/max depth then describe
    completed games only.
    """
    leaf_count: int
    min_depth: Optional[int]
    max_depth: Optional[int]
    leaves_by_depth: dict
    states_seen: int
    truncated: int
    symmetry: bool


@dataclass
class GraphNode:
    key: str
    queens: int
    board_class: BoardClass


@dataclass
class GraphEdge:
    src: str
    dst: str
    move: Move


@dataclass
class GameGraph:
    """Game positions merged up to symmetry, as a directed graph.

    Keys are canonical occupancy strings.  Each edge carries one
    representative move, taken from the stored concrete representative
    of its source node, so following edges from the root replays as a
    legal game.
    """
    n: int
    variant: GameVariant
    root: str
    nodes: dict
    edges: list


@dataclass
class LockedWitness:
    queens: Optional[int]
    record: Optional[GameRecord]
    states_searched: int


@dataclass
class ReachableStates:
    raw: int
    canonical: int


class _Geometry:
    """Bitboard tables for one board size: square bits, attack masks,
    and the eight symmetry permutations on square indices."""

    def __init__(self, n: int):
        self.n = n
        nsq = n * n
        self.nsq = nsq
        self.full = (1 << nsq) - 1
        self.bit = [1 << (nsq - 1 - i) for i in range(nsq)]
        self.attack = []
        for i in range(nsq):
            r, c = divmod(i, n)
            mask = 0
            for j in range(nsq):
                if j == i:
                    continue
                r2, c2 = divmod(j, n)
                if (r2 == r or c2 == c or r2 + c2 == r + c
                        or r2 - c2 == r - c):
                    mask |= self.bit[j]
            self.attack.append(mask)
        self.perms = []
        for sym in Symmetry:
            p = [0] * nsq
            for i in range(nsq):
                r, c = divmod(i, n)
                tr, tc = sym.apply(Square(r + 1, c + 1), n)
                p[i] = (tr - 1) * n + (tc - 1)
            self.perms.append(tuple(p))

    def map_occ(self, occ: int, perm) -> int:
        image = 0
        nsq = self.nsq
        bit = self.bit
        while occ:
            low = occ & -occ
            occ ^= low
            i = nsq - 1 - (low.bit_length() - 1)
            image |= bit[perm[i]]
        return image

    def canonical(self, occ: int) -> int:
        best = occ
        for perm in self.perms[1:]:
            image = self.map_occ(occ, perm)
            if image < best:
                best = image
        return best

    def key(self, occ: int) -> str:
        return format(occ, f"0{self.nsq}b")

    def square(self, i: int) -> Square:
        r, c = divmod(i, self.n)
        return Square(r + 1, c + 1)


@lru_cache(maxsize=None)
def _geometry(n: int) -> _Geometry:
    return _Geometry(n)


@dataclass(frozen=True)
class _Rules:
    start: int
    removing: bool
    residue: int
    modulus: int


def _rules(n: int, variant: GameVariant) -> _Rules:
    geo = _geometry(n)
    kind = variant.kind
    if kind is VariantKind.STANDARD:
        return _Rules(0, False, 0, variant.modulus)
    seed = variant.seed
    seed_bit = geo.bit[(seed.row - 1) * n + (seed.col - 1)]
    if kind is VariantKind.ALTERNATE:
        return _Rules(seed_bit, False, 1, 2)
    return _Rules(geo.full ^ seed_bit, True, 0, 2)


def _variant_or_standard(variant: Optional[GameVariant]) -> GameVariant:
    return variant if variant is not None else GameVariant()


def _moves(geo: _Geometry, rules: _Rules, occ: int) -> list:
    """Indices of legal move targets from occ, in row-major order."""
    out = []
    if rules.removing:
        for i in range(geo.nsq):
            b = geo.bit[i]
            if occ & b and (occ & geo.attack[i]).bit_count() % 2 == 0:
                out.append(i)
    else:
        for i in range(geo.nsq):
            b = geo.bit[i]
            if (not occ & b and (occ & geo.attack[i]).bit_count()
                    % rules.modulus == rules.residue):
                out.append(i)
    return out


def _classify(geo: _Geometry, rules: _Rules, occ: int, has_moves: bool) -> BoardClass:
    finished = occ == 0 if rules.removing else occ == geo.full
    if finished:
        return BoardClass.COMPLETE
    return BoardClass.UNLOCKED if has_moves else BoardClass.LOCKED


def _move_of(rules: _Rules, geo: _Geometry, i: int) -> Move:
    action = MoveAction.REMOVE if rules.removing else MoveAction.PLACE
    return Move(action, geo.square(i))


def occ_of_board(board: Board) -> int:
    """Pack a board's occupancy into the solver's integer form."""
    geo = _geometry(board.n)
    occ = 0
    for s in board.occupied:
        occ |= geo.bit[(s.row - 1) * board.n + (s.col - 1)]
    return occ


# -- win/loss ------------------------------------------------------------

def solve_game(n: int, variant: Optional[GameVariant] = None,
               use_symmetry: bool = True, force: bool = False) -> SolveResult:
    """Value of the initial position under normal play.

    The side to move Wins when some move leads to a Loss for the
    opponent; a position with no moves is a Loss.  Both players draw
    from the same move set, so the value depends only on the position
    and can be memoized, over canonical keys when use_symmetry is set.
    node_count is the number of distinct positions evaluated.
    """
    variant = _variant_or_standard(variant)
    _check_budget(n, force, "solve_game")
    geo = _geometry(n)
    rules = _rules(n, variant)
    memo: dict = {}

    def win(occ: int) -> bool:
        key = geo.canonical(occ) if use_symmetry else occ
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = False
        for i in _moves(geo, rules, occ):
            if not win(occ ^ geo.bit[i]):
                result = True
                break
        memo[key] = result
        return result

    value = win(rules.start)
    best = None
    if value:
        for i in _moves(geo, rules, rules.start):
            if not win(rules.start ^ geo.bit[i]):
                best = _move_of(rules, geo, i)
                break
    return SolveResult(Outcome.WIN if value else Outcome.LOSS, best, len(memo))


# -- enumeration ---------------------------------------------------------

def enumerate_games(n: int, variant: Optional[GameVariant] = None,
                    depth_limit: Optional[int] = None,
                    use_symmetry: bool = False,
                    force: bool = False) -> EnumerationStats:
    """Count every maximal game by dynamic programming over positions.

    Positions at the same move depth are grouped, carrying the number
    of move sequences that reach them, so the game count is exact
    without walking the game tree sequence by sequence.
    """
    variant = _variant_or_standard(variant)
    _check_budget(n, force, "enumerate_games")
    geo = _geometry(n)
    rules = _rules(n, variant)
    reduce = geo.canonical if use_symmetry else (lambda occ: occ)

    level = {reduce(rules.start): 1}
    leaves_by_depth: dict = {}
    states_seen = 0
    truncated = 0
    depth = 0
    while level:
        states_seen += len(level)
        next_level: dict = defaultdict(int)
        for occ, ways in level.items():
            moves = _moves(geo, rules, occ)
            if not moves:
                leaves_by_depth[depth] = leaves_by_depth.get(depth, 0) + ways
                continue
            if depth_limit is not None and depth >= depth_limit:
                truncated += ways
                continue
            for i in moves:
                next_level[reduce(occ ^ geo.bit[i])] += ways
        level = next_level
        depth += 1
    leaf_count = sum(leaves_by_depth.values())
    depths = sorted(leaves_by_depth)
    return EnumerationStats(
        leaf_count=leaf_count,
        min_depth=depths[0] if depths else None,
        max_depth=depths[-1] if depths else None,
        leaves_by_depth=dict(sorted(leaves_by_depth.items())),
        states_seen=states_seen,
        truncated=truncated,
        symmetry=use_symmetry,
    )


def count_reachable_states(n: int, variant: Optional[GameVariant] = None,
                           force: bool = False) -> ReachableStates:
    """Distinct positions reachable by legal play, raw and up to symmetry."""
    variant = _variant_or_standard(variant)
    _check_budget(n, force, "count_reachable_states")
    geo = _geometry(n)
    rules = _rules(n, variant)
    seen = {rules.start}
    canonical = {geo.canonical(rules.start)}
    frontier = [rules.start]
    while frontier:
        nxt = []
        for occ in frontier:
            for i in _moves(geo, rules, occ):
                child = occ ^ geo.bit[i]
                if child not in seen:
                    seen.add(child)
                    canonical.add(geo.canonical(child))
                    nxt.append(child)
        frontier = nxt
    return ReachableStates(raw=len(seen), canonical=len(canonical))


# -- canonical game graph ------------------------------------------------

def _canonical_closure(n: int, variant: GameVariant):
    """Breadth-first closure of canonical positions.

    Returns (geo, rules, nodes) where nodes maps canonical key to a
    record [rep_occ, parent_key, move, queens, has_moves] and the
    stored representative is the concrete position first reached, so
    parent chains replay as legal games.
    """
    geo = _geometry(n)
    rules = _rules(n, variant)
    start_key = geo.canonical(rules.start)
    nodes = {start_key: [rules.start, None, None, rules.start.bit_count(), False]}
    frontier = [start_key]
    while frontier:
        nxt = []
        for key in frontier:
            entry = nodes[key]
            occ = entry[0]
            moves = _moves(geo, rules, occ)
            entry[4] = bool(moves)
            for i in moves:
                child = occ ^ geo.bit[i]
                child_key = geo.canonical(child)
                if child_key not in nodes:
                    nodes[child_key] = [child, key, _move_of(rules, geo, i),
                                        child.bit_count(), False]
                    nxt.append(child_key)
        frontier = nxt
    return geo, rules, nodes


def _witness_record(n: int, variant: GameVariant, nodes: dict, key: str) -> GameRecord:
    moves = []
    while key is not None:
        entry = nodes[key]
        if entry[2] is not None:
            moves.append(entry[2])
        key = entry[1]
    moves.reverse()
    return GameRecord(n, variant, tuple(moves))


def build_game_graph(n: int, variant: Optional[GameVariant] = None,
                     force: bool = False) -> GameGraph:
    """Reachable positions merged across the eight symmetries."""
    variant = _variant_or_standard(variant)
    _check_budget(n, force, "build_game_graph")
    geo, rules, raw_nodes = _canonical_closure(n, variant)
    nodes = {}
    edges = []
    for key, (occ, _parent, _move, queens, has_moves) in raw_nodes.items():
        nodes[key] = GraphNode(key, queens, _classify(geo, rules, occ, has_moves))
    for key, (occ, _parent, _move, _queens, _has) in raw_nodes.items():
        targets = set()
        for i in _moves(geo, rules, occ):
            child_key = geo.canonical(occ ^ geo.bit[i])
            if child_key not in targets:
                targets.add(child_key)
                edges.append(GraphEdge(key, child_key, _move_of(rules, geo, i)))
    root = geo.canonical(rules.start)
    return GameGraph(n, variant, root, nodes, edges)


def max_locked_queens(n: int, variant: Optional[GameVariant] = None,
                      force: bool = False) -> LockedWitness:
    """Largest queen count over reachable Locked positions, with a witness."""
    return _locked_extreme(n, variant, force, want_max=True)


def min_locked_queens(n: int, variant: Optional[GameVariant] = None,
                      force: bool = False) -> LockedWitness:
    """Smallest queen count over reachable Locked positions, with a witness."""
    return _locked_extreme(n, variant, force, want_max=False)


def _locked_extreme(n, variant, force, want_max):
    variant = _variant_or_standard(variant)
    op = "max_locked_queens" if want_max else "min_locked_queens"
    _check_budget(n, force, op)
    geo, rules, nodes = _canonical_closure(n, variant)
    best_key = None
    best_queens = None
    for key, (occ, _parent, _move, queens, has_moves) in nodes.items():
        if _classify(geo, rules, occ, has_moves) is not BoardClass.LOCKED:
            continue
        if (best_queens is None
                or (queens > best_queens if want_max else queens < best_queens)):
            best_key = key
            best_queens = queens
    if best_key is None:
        return LockedWitness(None, None, len(nodes))
    return LockedWitness(best_queens,
                         _witness_record(n, variant, nodes, best_key),
                         len(nodes))


# -- DOT export ----------------------------------------------------------

def export_dot(graph: GameGraph, path: Optional[str] = None) -> str:
    """Render a game graph in DOT form, byte-identical across runs.

    Locked leaves are drawn filled, the complete leaf double-bordered,
    and the root double-ringed; edges carry their representative move.
    """
    lines = ["digraph game {"]
    lines.append(f'  graph [label="n={graph.n} {graph.variant.kind.value}"];')
    lines.append("  node [shape=circle, fontsize=10];")
    for node in sorted(graph.nodes.values(), key=lambda v: (v.queens, v.key)):
        attrs = [f'label="{node.queens}"']
        if node.key == graph.root:
            attrs.append("penwidth=2")
        if node.board_class is BoardClass.LOCKED:
            attrs.append("style=filled")
            attrs.append("fillcolor=gray25")
            attrs.append("fontcolor=white")
        elif node.board_class is BoardClass.COMPLETE:
            attrs.append("shape=doublecircle")
        lines.append(f'  "{node.key}" [{", ".join(attrs)}];')
    for edge in sorted(graph.edges, key=lambda e: (e.src, e.dst)):
        move = edge.move
        label = f"{move.action.value} ({move.at.row},{move.at.col})"
        lines.append(f'  "{edge.src}" -> "{edge.dst}" [label="{label}"];')
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as handle:
            handle.write(text)
    return text


# -- move choice for interactive play ------------------------------------

def choose_move(board: Board, exact_limit: int = DEFAULT_BUDGET) -> Optional[Move]:
    """Engine move for the current position, or None when stuck.

    Up to exact_limit the choice is perfect: a winning reply when one
    exists.  Beyond that, and as the fallback in lost positions, the
    engine maximizes the opponent's closed squares after its move,
    breaking ties toward the smallest (row, col).
    """
    legal = board.legal_moves()
    if not legal:
        return None
    if board.n <= exact_limit:
        geo = _geometry(board.n)
        rules = _rules(board.n, board.variant)
        occ = occ_of_board(board)
        memo: dict = {}

        def win(pos: int) -> bool:
            key = geo.canonical(pos)
            hit = memo.get(key)
            if hit is not None:
                return hit
            result = False
            for i in _moves(geo, rules, pos):
                if not win(pos ^ geo.bit[i]):
                    result = True
                    break
            memo[key] = result
            return result

        for i in _moves(geo, rules, occ):
            if not win(occ ^ geo.bit[i]):
                return _move_of(rules, geo, i)
    best = None
    best_closed = -1
    for move in legal:
        board.apply_move(move)
        closed = 0
        for r in range(1, board.n + 1):
            for c in range(1, board.n + 1):
                s = Square(r, c)
                if not board.is_occupied(s) and not board.open_square(s):
                    closed += 1
        board.undo_move()
        if closed > best_closed:
            best = move
            best_closed = closed
    return best
