"""Command-line front end: play at the terminal, emit constructions,
run the claim checks, solve and enumerate positions, export graphs,
and launch the HTTP service.

Exit codes: 0 success, 1 failed check or lost verification, 2 usage
error, 3 refused for exceeding the exhaustive-search budget.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .board import (Board, BoardClass, GameVariant, IllegalMoveError, Move,
                    MoveAction, Square, VariantKind)
from .claims import CLAIMS, run_claims
from .constructions import (even_locked_sequence, even_near_complete_sequence,
                            frame_fill_sequence, odd_complete_sequence,
                            odd_locked_sequence, verify_sequence)
from .records import GameRecord, dump_record, parse_record
from .solver import (BudgetError, build_game_graph, choose_move,
                     count_reachable_states, enumerate_games, export_dot,
                     solve_game)

_VARIANT_NAMES = [kind.value for kind in VariantKind]


def _parse_seed(value: Optional[str]) -> Optional[Square]:
    if value is None:
        return None
    parts = value.split(",")
    if len(parts) != 2:
        raise click.BadParameter("seed must look like row,col")
    try:
        return Square(int(parts[0]), int(parts[1]))
    except ValueError:
        raise click.BadParameter("seed coordinates must be integers") from None


def _make_variant(variant: str, seed: Optional[str], modulus: int) -> GameVariant:
    try:
        return GameVariant(VariantKind(variant), modulus, _parse_seed(seed))
    except ValueError as err:
        raise click.BadParameter(str(err)) from None


def _budget_exit(err: BudgetError) -> None:
    click.echo(f"refused: {err}", err=True)
    sys.exit(3)


def _render(board: Board) -> str:
    width = len(str(board.n))
    header = " " * (width + 1) + " ".join(f"{c:>{width}}" for c in range(1, board.n + 1))
    lines = [header]
    for r in range(1, board.n + 1):
        cells = []
        for c in range(1, board.n + 1):
            s = Square(r, c)
            if board.is_occupied(s):
                cells.append("Q".rjust(width))
            elif board.open_square(s):
                cells.append(".".rjust(width))
            else:
                cells.append("x".rjust(width))
        lines.append(f"{r:>{width}} " + " ".join(cells))
    return "\n".join(lines)


@click.group()
def main():
    """Play, analyze, and serve the mod-2 n-queens game."""


@main.command()
@click.option("--n", type=int, required=True, help="Board size.")
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), default="standard")
@click.option("--seed", default=None, help="row,col seed for seeded variants.")
@click.option("--k", "modulus", type=int, default=2, help="Attack-count modulus.")
@click.option("--engine", is_flag=True, help="Play against the engine (it moves second).")
def play(n, variant, seed, modulus, engine):
    """Interactive game at the terminal.

    Enter moves as 'row col'; 'undo' takes back your last move and
    'quit' leaves the game.  Open squares show as '.', closed ones as
    'x'.  In complementary games a move removes the queen at the
    square you enter.
    """
    game_variant = _make_variant(variant, seed, modulus)
    try:
        board = Board(n, game_variant)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    removing = game_variant.kind is VariantKind.COMPLEMENTARY
    action = MoveAction.REMOVE if removing else MoveAction.PLACE
    while True:
        click.echo(_render(board))
        cls = board.classify()
        if cls is not BoardClass.UNLOCKED:
            loser = 1 if len(board.history) % 2 == 0 else 2
            click.echo(f"board is {cls.value} after {len(board.history)} moves; "
                       f"player {loser} cannot move and loses")
            if engine and loser == 2:
                click.echo("you win")
            elif engine and loser == 1:
                click.echo("the engine wins")
            return
        mover = 1 if len(board.history) % 2 == 0 else 2
        prompt = "your move" if engine else f"player {mover}"
        try:
            entry = click.prompt(f"{prompt} (row col / undo / quit)",
                                 prompt_suffix=": ").strip()
        except (click.Abort, EOFError):
            click.echo("goodbye")
            return
        if entry == "quit":
            click.echo("goodbye")
            return
        if entry == "undo":
            plies = 2 if engine and len(board.history) >= 2 else 1
            try:
                for _ in range(plies):
                    board.undo_move()
            except IllegalMoveError as err:
                click.echo(f"cannot undo: {err}")
            continue
        parts = entry.split()
        if len(parts) != 2:
            click.echo("enter a move as two numbers, like: 2 3")
            continue
        try:
            move = Move(action, Square(int(parts[0]), int(parts[1])))
        except ValueError:
            click.echo("enter a move as two numbers, like: 2 3")
            continue
        try:
            board.apply_move(move)
        except IllegalMoveError as err:
            click.echo(f"illegal move: {err}")
            continue
        if engine and board.classify() is BoardClass.UNLOCKED:
            reply = choose_move(board)
            board.apply_move(reply)
            click.echo(f"engine plays ({reply.at.row}, {reply.at.col})")


_KINDS = {
    "frame": (frame_fill_sequence, "fill rows 1-2 and columns 1-2"),
    "odd-complete": (odd_complete_sequence, "fill an odd board completely"),
    "odd-locked": (odd_locked_sequence, "lock an odd board with 2n-1 queens"),
    "even-locked": (even_locked_sequence, "lock an even board with 2n-3 queens"),
    "even-near-complete": (even_near_complete_sequence,
                           "reach n*n-2 queens on an even board"),
}


@main.command()
@click.option("--kind", type=click.Choice(sorted(_KINDS)), required=True)
@click.option("--n", type=int, required=True, help="Board size.")
@click.option("--out", type=click.Path(writable=True), default=None,
              help="Write the record here instead of stdout.")
def construct(kind, n, out):
    """Emit a known construction as a game record."""
    builder, _ = _KINDS[kind]
    try:
        moves = builder(n)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    text = dump_record(GameRecord(n, GameVariant(), tuple(moves)))
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--claims", "names", default="all",
              help="Comma-separated claim names, or all.  Known: "
                   + ", ".join(CLAIMS) + ".")
@click.option("--max-n", type=int, default=11,
              help="Largest board size for the size-scaling checks.")
@click.option("--record", "record_path", type=click.Path(exists=True),
              default=None, help="Replay this record file instead.")
def verify(names, max_n, record_path):
    """Run the claim checks, or replay a record file."""
    if record_path is not None:
        with open(record_path) as handle:
            try:
                record = parse_record(handle.read())
            except ValueError as err:
                raise click.BadParameter(f"{record_path}: {err}") from None
        report = verify_sequence(record)
        click.echo(f"legal={'yes' if report.legal else 'no'}")
        click.echo(f"moves_applied={report.moves_applied}")
        if not report.legal:
            at = report.first_illegal.at
            click.echo(f"first_illegal={report.first_illegal.action.value} "
                       f"{at.row} {at.col}")
            click.echo(f"rule={report.rule}")
        click.echo(f"class={report.final_class.value}")
        click.echo(f"queens={report.board.queens}")
        sys.exit(0 if report.legal else 1)
    try:
        results = run_claims(tuple(name.strip() for name in names.split(",")),
                             max_n=max_n)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    failed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"CLAIM {result.name} {status}: {result.detail}")
        failed += 0 if result.passed else 1
    if failed:
        click.echo(f"{failed} of {len(results)} claims failed")
        sys.exit(1)
    click.echo(f"all {len(results)} claims hold")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), default="standard")
@click.option("--seed", default=None, help="row,col seed for seeded variants.")
@click.option("--k", "modulus", type=int, default=2)
@click.option("--symmetry/--no-symmetry", default=True,
              help="Memoize over canonical positions.")
@click.option("--force", is_flag=True, help="Run past the size budget.")
def solve(n, variant, seed, modulus, symmetry, force):
    """Win/loss value of the initial position under perfect play."""
    game_variant = _make_variant(variant, seed, modulus)
    try:
        result = solve_game(n, game_variant, use_symmetry=symmetry, force=force)
    except BudgetError as err:
        _budget_exit(err)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    click.echo(f"value={result.value.value}")
    if result.best_move is not None:
        move = result.best_move
        click.echo(f"best_move={move.action.value} {move.at.row} {move.at.col}")
    else:
        click.echo("best_move=none")
    click.echo(f"node_count={result.node_count}")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), default="standard")
@click.option("--seed", default=None, help="row,col seed for seeded variants.")
@click.option("--k", "modulus", type=int, default=2)
@click.option("--depth-limit", type=int, default=None,
              help="Stop expanding games past this many moves.")
@click.option("--symmetry", is_flag=True,
              help="Merge symmetric positions while counting.")
@click.option("--force", is_flag=True, help="Run past the size budget.")
@click.option("--report", "report_path", type=click.Path(writable=True),
              default=None, help="Also write the counts as JSON.")
def enumerate(n, variant, seed, modulus, depth_limit, symmetry, force,
              report_path):
    """Count all complete games and reachable positions."""
    game_variant = _make_variant(variant, seed, modulus)
    try:
        stats = enumerate_games(n, game_variant, depth_limit=depth_limit,
                                use_symmetry=symmetry, force=force)
        reach = count_reachable_states(n, game_variant, force=force)
    except BudgetError as err:
        _budget_exit(err)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    payload = {
        "n": n,
        "variant": game_variant.kind.value,
        "k": game_variant.modulus,
        "leaf_count": stats.leaf_count,
        "min_depth": stats.min_depth,
        "max_depth": stats.max_depth,
        "truncated": stats.truncated,
        "states_seen": stats.states_seen,
        "reachable_raw": reach.raw,
        "reachable_canonical": reach.canonical,
        "leaves_by_depth": stats.leaves_by_depth,
    }
    for key, value in payload.items():
        if key == "leaves_by_depth":
            for depth, count in value.items():
                click.echo(f"leaves_at_depth.{depth}={count}")
        else:
            click.echo(f"{key}={value}")
    if report_path:
        with open(report_path, "w") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), default="standard")
@click.option("--seed", default=None, help="row,col seed for seeded variants.")
@click.option("--k", "modulus", type=int, default=2)
@click.option("--dot", "dot_path", type=click.Path(writable=True),
              default=None, help="Write the graph in DOT form here.")
@click.option("--report", "report_path", type=click.Path(writable=True),
              default=None, help="Also write the counts as JSON.")
@click.option("--force", is_flag=True, help="Run past the size budget.")
def graph(n, variant, seed, modulus, dot_path, report_path, force):
    """Game graph over positions merged up to symmetry."""
    game_variant = _make_variant(variant, seed, modulus)
    try:
        game_graph = build_game_graph(n, game_variant, force=force)
    except BudgetError as err:
        _budget_exit(err)
    except ValueError as err:
        raise click.BadParameter(str(err)) from None
    classes = {"locked": 0, "complete": 0, "unlocked": 0}
    for node in game_graph.nodes.values():
        classes[node.board_class.value] += 1
    payload = {
        "n": n,
        "variant": game_variant.kind.value,
        "k": game_variant.modulus,
        "nodes": len(game_graph.nodes),
        "edges": len(game_graph.edges),
        "locked": classes["locked"],
        "complete": classes["complete"],
        "root": game_graph.root,
    }
    for key, value in payload.items():
        click.echo(f"{key}={value}")
    if dot_path:
        export_dot(game_graph, dot_path)
    if report_path:
        with open(report_path, "w") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
@click.option("--log-dir", type=click.Path(), default=None,
              help="Write finished games here as record files.")
@click.option("--static-dir", type=click.Path(exists=True), default=None,
              help="Serve this directory at / (a built web client).")
def serve(host, port, log_dir, static_dir):
    """Run the HTTP game service."""
    import uvicorn

    from .service.app import create_app

    app = create_app(log_dir=log_dir, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
