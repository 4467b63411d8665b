"""Headline facts about the game, packaged as named, runnable checks.

Each check replays constructions or reruns searches and reports PASS
or FAIL with a short deterministic detail string, so the command line
can print one line per claim.  Sizes scale with max_n where a
construction applies at every size; exhaustive searches stay within
the solver's budget regardless of max_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .board import Board, BoardClass, GameVariant, Square, place
from .constructions import (even_locked_sequence, even_near_complete_sequence,
                            odd_complete_sequence, odd_locked_sequence,
                            verify_sequence)
from .records import GameRecord
from .solver import (build_game_graph, enumerate_games, max_locked_queens,
                     min_locked_queens, solve_game)
from .variants import MapDirection, verify_bijection


@dataclass
class ClaimResult:
    name: str
    passed: bool
    detail: str


def _replay(n: int, moves) -> Tuple[bool, object]:
    report = verify_sequence(GameRecord(n, GameVariant(), tuple(moves)))
    return report.legal, report


def _claim_odd_complete(max_n: int):
    sizes = [n for n in range(1, max_n + 1, 2)]
    for n in sizes:
        legal, report = _replay(n, odd_complete_sequence(n))
        if not (legal and report.final_class is BoardClass.COMPLETE
                and report.board.queens == n * n):
            return False, f"n={n} did not reach a complete board"
    return True, f"odd n in {sizes}: all {max_n}x{max_n}-and-under boards filled"


def _claim_even_incomplete(max_n: int):
    sizes = [n for n in range(2, max_n + 1, 2)]
    for n in sizes:
        squares = [Square(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
        for s in squares:
            board = Board._from_position(n, GameVariant(),
                                         [q for q in squares if q != s])
            if board.attackers(s) % 2 == 0:
                return False, f"n={n}: last hole {tuple(s)} is open"
    searched = [n for n in (2, 4) if n <= max_n]
    for n in searched:
        graph = build_game_graph(n)
        complete = [v for v in graph.nodes.values()
                    if v.board_class is BoardClass.COMPLETE]
        if complete:
            return False, f"n={n}: search found a complete position"
    return True, (f"even n in {sizes}: every last hole is closed; "
                  f"search over n in {searched} finds no complete position")


def _claim_even_near_complete(max_n: int):
    sizes = [n for n in range(4, max_n + 1, 2)]
    for n in sizes:
        legal, report = _replay(n, even_near_complete_sequence(n))
        if not (legal and report.final_class is BoardClass.LOCKED
                and report.board.queens == n * n - 2):
            return False, f"n={n} did not lock at {n * n - 2} queens"
    details = f"even n in {sizes}: locked at n*n-2 queens"
    if max_n >= 4:
        best = max_locked_queens(4)
        if best.queens != 14:
            return False, f"search says the 4x4 maximum is {best.queens}, not 14"
        details += "; search confirms 14 is the 4x4 maximum"
    return True, details


def _claim_odd_locked(max_n: int):
    sizes = [n for n in range(3, max_n + 1, 2)]
    for n in sizes:
        legal, report = _replay(n, odd_locked_sequence(n))
        board = report.board
        if not (legal and report.final_class is BoardClass.LOCKED
                and board.queens == 2 * n - 1):
            return False, f"n={n} did not lock at {2 * n - 1} queens"
        counts = {board.attackers(Square(r, c))
                  for r in range(1, n + 1) for c in range(1, n + 1)
                  if not board.is_occupied(Square(r, c))}
        if not counts <= {3, 5}:
            return False, f"n={n}: empty-square attacker counts {sorted(counts)}"
    return True, (f"odd n in {sizes}: locked at 2n-1 queens, "
                  f"all empty squares attacked 3 or 5 times")


def _claim_even_locked(max_n: int):
    sizes = [n for n in range(2, max_n + 1, 2)]
    for n in sizes:
        legal, report = _replay(n, even_locked_sequence(n))
        if not (legal and report.final_class is BoardClass.LOCKED
                and report.board.queens == 2 * n - 3):
            return False, f"n={n} did not lock at {2 * n - 3} queens"
    return True, f"even n in {sizes}: locked at 2n-3 queens"


def _claim_single_queen(max_n: int):
    for r in range(1, 3):
        for c in range(1, 3):
            board = Board(2)
            board.apply_move(place(r, c))
            if board.classify() is not BoardClass.LOCKED:
                return False, f"2x2 queen at {(r, c)} leaves an open square"
    if max_n >= 3:
        for r in range(1, 4):
            for c in range(1, 4):
                board = Board(3)
                board.apply_move(place(r, c))
                locked = board.classify() is BoardClass.LOCKED
                center = (r, c) == (2, 2)
                if locked != center:
                    return False, (f"3x3 queen at {(r, c)}: "
                                   f"{'locked' if locked else 'open'}")
    return True, ("any first queen locks the 2x2 board; on 3x3 exactly "
                  "the center queen locks it")


def _claim_locking_bounds(max_n: int):
    for n in range(2, max_n + 1):
        bound = 2 * n - 1 if n % 2 else 2 * n - 3
        if n % 2:
            moves = odd_locked_sequence(n)
        else:
            moves = even_locked_sequence(n)
        legal, report = _replay(n, moves)
        if not (legal and report.final_class is BoardClass.LOCKED
                and report.board.queens == bound):
            return False, f"n={n}: no witness at the {bound}-queen bound"
    minima = {}
    for n in (2, 3, 4):
        if n > max_n:
            continue
        found = min_locked_queens(n)
        bound = 2 * n - 1 if n % 2 else 2 * n - 3
        minima[n] = found.queens
        if found.queens is None or found.queens > bound:
            return False, f"n={n}: search minimum {found.queens} beats no bound"
    return True, (f"locked witnesses at 2n-1 (odd) and 2n-3 (even) up to "
                  f"n={max_n}; search minima {minima}")


def _claim_bijection_even(max_n: int):
    checked = []
    for direction in (MapDirection.ALT_TO_COMP, MapDirection.COMP_TO_ALT):
        report = verify_bijection(2, direction)
        checked.append(f"n=2 {direction.value} ({report.records} records)")
        if report.failures:
            return False, (f"n=2 {direction.value}: "
                           f"{report.failures} failures")
    if max_n >= 4:
        for direction in (MapDirection.ALT_TO_COMP, MapDirection.COMP_TO_ALT):
            report = verify_bijection(4, direction, depth_limit=6,
                                      dedup_states=True)
            checked.append(f"n=4 {direction.value} to depth 6")
            if report.failures:
                return False, (f"n=4 {direction.value}: "
                               f"{report.failures} failures")
    return True, "; ".join(checked)


def _claim_bijection_odd(max_n: int):
    checked = []
    for n in (1, 3):
        if n > max_n:
            continue
        for direction in (MapDirection.COMP_TO_STD, MapDirection.STD_TO_COMP):
            report = verify_bijection(n, direction)
            checked.append(f"n={n} {direction.value} ({report.records} records)")
            if report.failures:
                return False, (f"n={n} {direction.value}: "
                               f"{report.failures} failures")
    return True, "; ".join(checked)


def _claim_tree_bounds(max_n: int):
    import math
    details = []
    for n in range(1, min(3, max_n) + 1):
        stats = enumerate_games(n)
        if stats.leaf_count > math.factorial(n * n):
            return False, f"n={n}: leaf count exceeds (n*n)!"
        if stats.states_seen > 2 ** (n * n):
            return False, f"n={n}: state count exceeds 2^(n*n)"
        if n == 2 and stats.leaf_count != 4:
            return False, f"n=2 leaf count is {stats.leaf_count}, not 4"
        details.append(f"n={n}: {stats.leaf_count} games over "
                       f"{stats.states_seen} positions")
    return True, "; ".join(details) + "; within (n*n)! and 2^(n*n)"


def _claim_solved_values(max_n: int):
    for n in range(1, min(3, max_n) + 1):
        result = solve_game(n)
        if result.value.value != "win":
            return False, f"n={n} solves as a loss for the first player"
    details = "first player wins n=1..3"
    if max_n >= 4:
        fast = solve_game(4, use_symmetry=True)
        slow = solve_game(4, use_symmetry=False)
        if fast.value is not slow.value:
            return False, "n=4 value changes with the symmetry memo"
        details += (f"; n=4 is a {fast.value.value} over {fast.node_count} "
                    f"canonical / {slow.node_count} raw positions")
    return True, details


CLAIMS = {
    "odd-complete": _claim_odd_complete,
    "even-incomplete": _claim_even_incomplete,
    "even-near-complete": _claim_even_near_complete,
    "odd-locked": _claim_odd_locked,
    "even-locked": _claim_even_locked,
    "single-queen-locks": _claim_single_queen,
    "locking-bounds": _claim_locking_bounds,
    "bijection-even": _claim_bijection_even,
    "bijection-odd": _claim_bijection_odd,
    "tree-bounds": _claim_tree_bounds,
    "solved-values": _claim_solved_values,
}


def run_claims(names=("all",), max_n: int = 11) -> List[ClaimResult]:
    if "all" in names:
        selected = list(CLAIMS)
    else:
        unknown = [name for name in names if name not in CLAIMS]
        if unknown:
            raise ValueError(f"unknown claims: {', '.join(unknown)}; "
                             f"choose from {', '.join(CLAIMS)} or all")
        selected = [name for name in CLAIMS if name in names]
    results = []
    for name in selected:
        try:
            passed, detail = CLAIMS[name](max_n)
        except Exception as err:
            passed, detail = False, f"raised {type(err).__name__}: {err}"
        results.append(ClaimResult(name, passed, detail))
    return results
