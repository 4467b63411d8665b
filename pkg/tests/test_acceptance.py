"""Acceptance suite: every headline result, one test per criterion.

Each test re-derives its result from scratch at the stated size and
asserts the stated time bound, so a green run here is the package's
claim sheet.  The terminal summary prints one PASS/FAIL line per
criterion (see conftest.py).
"""

import math
import random
import time

from modqueens.board import (Board, BoardClass, GameVariant, Square,
                             Symmetry, new_board, place, transform)
from modqueens.constructions import (even_locked_sequence,
                                     even_near_complete_sequence,
                                     odd_complete_sequence,
                                     odd_locked_sequence, verify_sequence)
from modqueens.records import GameRecord
from modqueens.solver import (Outcome, build_game_graph,
                              count_reachable_states, enumerate_games,
                              export_dot, max_locked_queens, solve_game)
from modqueens.variants import MapDirection, complement_board, verify_bijection

_SEARCH_BUDGET_SECONDS = 30 * 60


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start

    def under(self, bound):
        assert self.elapsed < bound, \
            f"took {self.elapsed:.2f}s, bound {bound}s"


def _locked_replay(n, moves):
    report = verify_sequence(GameRecord(n, GameVariant(), tuple(moves)))
    assert report.legal, f"n={n}: illegal at {report.rule}"
    return report


def test_odd_boards_fill_completely():
    with _Timer() as t:
        for n in (1, 3, 5, 7, 9, 11, 13):
            report = _locked_replay(n, odd_complete_sequence(n))
            assert report.final_class is BoardClass.COMPLETE
            assert report.board.queens == n * n
    t.under(5.0)


def test_even_boards_never_complete():
    with _Timer() as t:
        for n in (2, 4, 6, 8, 10):
            squares = [Square(r, c)
                       for r in range(1, n + 1) for c in range(1, n + 1)]
            for s in squares:
                board = Board._from_position(
                    n, GameVariant(), (q for q in squares if q != s))
                assert board.attackers(s) % 2 == 1, \
                    f"n={n}: the board missing only {tuple(s)} is open there"
    t.under(1.0)
    with _Timer() as search:
        for n in (2, 4):
            graph = build_game_graph(n)
            complete = [v for v in graph.nodes.values()
                        if v.board_class is BoardClass.COMPLETE]
            assert complete == [], f"n={n}: search reached a full board"
    search.under(_SEARCH_BUDGET_SECONDS)


def test_fourteen_queens_is_the_4x4_locking_maximum():
    with _Timer() as t:
        best = max_locked_queens(4)
    t.under(_SEARCH_BUDGET_SECONDS)
    assert best.queens == 14 == 4 * 4 - 2
    report = verify_sequence(best.record)
    assert report.legal
    assert report.final_class is BoardClass.LOCKED
    assert report.board.queens == 14


def test_locked_frames_at_linear_sizes():
    with _Timer() as t:
        for n in range(3, 16, 2):
            report = _locked_replay(n, odd_locked_sequence(n))
            board = report.board
            assert report.final_class is BoardClass.LOCKED
            assert board.queens == 2 * n - 1
            counts = {board.attackers(Square(r, c))
                      for r in range(1, n + 1) for c in range(1, n + 1)
                      if not board.is_occupied(Square(r, c))}
            assert counts <= {3, 5}, f"n={n}: counts {sorted(counts)}"
        for n in range(4, 17, 2):
            report = _locked_replay(n, even_locked_sequence(n))
            assert report.final_class is BoardClass.LOCKED
            assert report.board.queens == 2 * n - 3
    t.under(10.0)


def test_single_queen_locking_facts():
    with _Timer() as t:
        for r in (1, 2):
            for c in (1, 2):
                board = new_board(2)
                board.apply_move(place(r, c))
                assert board.classify() is BoardClass.LOCKED
        for r in (1, 2, 3):
            for c in (1, 2, 3):
                board = new_board(3)
                board.apply_move(place(r, c))
                locked = board.classify() is BoardClass.LOCKED
                assert locked == ((r, c) == (2, 2)), \
                    f"3x3 first move {(r, c)} misclassified"
    t.under(1.0)


def test_first_player_wins_small_boards():
    with _Timer() as t:
        for n in (1, 2, 3):
            assert solve_game(n).value is Outcome.WIN
    t.under(1.0)
    with _Timer() as big:
        fast = solve_game(4, use_symmetry=True)
        slow = solve_game(4, use_symmetry=False)
    big.under(_SEARCH_BUDGET_SECONDS)
    # regression constants from the first full computation
    assert fast.value is Outcome.WIN and slow.value is Outcome.WIN
    assert fast.node_count == 1802
    assert slow.node_count == 4867


def test_variant_maps_hold_exhaustively():
    with _Timer() as t:
        for direction in (MapDirection.ALT_TO_COMP, MapDirection.COMP_TO_ALT):
            report = verify_bijection(2, direction)
            assert report.failures == 0, report.examples[:1]
            assert report.seeds == 4
        for direction in (MapDirection.STD_TO_COMP, MapDirection.COMP_TO_STD):
            report = verify_bijection(3, direction)
            assert report.failures == 0, report.examples[:1]
            assert report.seeds == 9
        for direction in (MapDirection.ALT_TO_COMP, MapDirection.COMP_TO_ALT):
            spot = verify_bijection(4, direction, depth_limit=6,
                                    dedup_states=True)
            assert spot.failures == 0, spot.examples[:1]
    t.under(120.0)


def test_game_counts_respect_bounds():
    with _Timer() as t:
        for n in (1, 2, 3):
            stats = enumerate_games(n)
            reach = count_reachable_states(n)
            assert stats.leaf_count <= math.factorial(n * n)
            assert reach.raw <= 2 ** (n * n)
            if n == 2:
                assert stats.leaf_count == 4
    t.under(1.0)
    stats = enumerate_games(4)
    reach = count_reachable_states(4)
    assert stats.leaf_count == 1262716000 <= math.factorial(16)
    assert reach.raw == 33043 <= 2 ** 16


def _random_playout(rng, board, spot_check=None):
    while True:
        moves = board.legal_moves()
        if not moves:
            return
        board.apply_move(rng.choice(moves))
        if spot_check is not None:
            spot_check(board)


def _count_by_hand(board, s):
    total = 0
    for q in board.occupied:
        if q == (s.row, s.col):
            continue
        if (q[0] == s.row or q[1] == s.col
                or q[0] + q[1] == s.row + s.col
                or q[0] - q[1] == s.row - s.col):
            total += 1
    return total


def _random_board(rng, max_n=8):
    n = rng.randint(1, max_n)
    roll = rng.random()
    if roll < 0.6:
        variant = GameVariant(modulus=rng.choice((2, 2, 2, 3)))
    elif roll < 0.85:
        seed = Square(rng.randint(1, n), rng.randint(1, n))
        variant = GameVariant.alternate(seed)
    else:
        n = rng.randint(1, 5)
        seed = Square(rng.randint(1, n), rng.randint(1, n))
        variant = GameVariant.complementary(seed)
    return Board(n, variant)


def test_property_cache_matches_hand_counts():
    rng = random.Random(20260822)
    for _ in range(1000):
        board = _random_board(rng)

        def spot_check(b):
            s = Square(rng.randint(1, b.n), rng.randint(1, b.n))
            assert b.attackers(s) == _count_by_hand(b, s)

        _random_playout(rng, board, spot_check)
        for r in range(1, board.n + 1):
            for c in range(1, board.n + 1):
                s = Square(r, c)
                assert board.attackers(s) == _count_by_hand(board, s)


def test_property_undo_round_trip():
    rng = random.Random(411)
    for _ in range(300):
        board = _random_board(rng)
        before = (set(board.occupied), board.classify(),
                  [board.attackers(Square(r, c))
                   for r in range(1, board.n + 1)
                   for c in range(1, board.n + 1)])
        _random_playout(rng, board)
        moves = len(board.history)
        for _ in range(moves):
            board.undo_move()
        after = (set(board.occupied), board.classify(),
                 [board.attackers(Square(r, c))
                  for r in range(1, board.n + 1)
                  for c in range(1, board.n + 1)])
        assert after == before


def test_property_attack_counts_respect_symmetry():
    rng = random.Random(92)
    for _ in range(200):
        board = _random_board(rng, max_n=6)
        _random_playout(rng, board)
        for sym in Symmetry:
            image = transform(board, sym)
            for r in range(1, board.n + 1):
                for c in range(1, board.n + 1):
                    s = Square(r, c)
                    assert board.attackers(s) == image.attackers(sym.apply(s, board.n))


def test_property_complement_is_involutive():
    rng = random.Random(7)
    for _ in range(200):
        board = _random_board(rng, max_n=6)
        _random_playout(rng, board)
        assert complement_board(complement_board(board)).occupied == board.occupied


def test_property_memo_agrees_with_plain_search():
    for n in (1, 2, 3):
        for variant in (GameVariant.standard(),
                        GameVariant.alternate((1, 1)),
                        GameVariant.complementary((1, 1))):
            fast = solve_game(n, variant, use_symmetry=True)
            slow = solve_game(n, variant, use_symmetry=False)
            assert fast.value is slow.value


def test_game_graph_drawing():
    graph = build_game_graph(3)
    # baselines frozen from the first computation, checked self-consistent
    assert len(graph.nodes) == 41
    assert len(graph.edges) == 66
    by_class = {}
    for node in graph.nodes.values():
        by_class[node.board_class] = by_class.get(node.board_class, 0) + 1
    assert by_class[BoardClass.LOCKED] == 5
    assert by_class[BoardClass.COMPLETE] == 1
    assert sum(by_class.values()) == 41
    assert graph.root in graph.nodes
    for edge in graph.edges:
        assert edge.src in graph.nodes and edge.dst in graph.nodes
    out_degree = {key: 0 for key in graph.nodes}
    for edge in graph.edges:
        out_degree[edge.src] += 1
    terminal = {key for key, deg in out_degree.items() if deg == 0}
    stuck = {key for key, node in graph.nodes.items()
             if node.board_class is not BoardClass.UNLOCKED}
    assert terminal == stuck
    text = export_dot(graph)
    assert text.startswith("digraph game {")
    assert text.rstrip().endswith("}")
    assert text.count("{") == text.count("}")
    assert text.count("style=filled") == by_class[BoardClass.LOCKED]
    assert text.count("shape=doublecircle") == by_class[BoardClass.COMPLETE]
    assert text.count(" -> ") == len(graph.edges)
