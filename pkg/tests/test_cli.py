"""Command-line surface: outputs, exit codes, and file side effects."""

import json

import pytest
from click.testing import CliRunner

from modqueens.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_solve_output_is_exact(runner):
    result = runner.invoke(main, ["solve", "--n", "3"])
    assert result.exit_code == 0
    assert result.output == "value=win\nbest_move=P 1 1\nnode_count=8\n"


def test_solve_no_symmetry_changes_node_count_only(runner):
    result = runner.invoke(main, ["solve", "--n", "3", "--no-symmetry"])
    assert result.exit_code == 0
    assert result.output == "value=win\nbest_move=P 1 1\nnode_count=32\n"


def test_solve_rejects_bad_seed(runner):
    result = runner.invoke(main, ["solve", "--n", "3",
                                  "--variant", "alternate-universe",
                                  "--seed", "nonsense"])
    assert result.exit_code == 2
    assert "seed must look like row,col" in result.output


def test_solve_requires_seed_for_seeded_variant(runner):
    result = runner.invoke(main, ["solve", "--n", "3",
                                  "--variant", "complementary"])
    assert result.exit_code == 2


def test_budget_refusal_exits_3(runner):
    result = runner.invoke(main, ["solve", "--n", "5"])
    assert result.exit_code == 3
    assert "refused" in result.output
    assert "force" in result.output


def test_enumerate_small_board(runner):
    result = runner.invoke(main, ["enumerate", "--n", "2"])
    assert result.exit_code == 0
    lines = dict(line.split("=", 1) for line in result.output.splitlines())
    assert lines["leaf_count"] == "4"
    assert lines["reachable_raw"] == "5"
    assert lines["reachable_canonical"] == "2"
    assert lines["leaves_at_depth.1"] == "4"


def test_enumerate_report_json(runner, tmp_path):
    target = tmp_path / "counts.json"
    result = runner.invoke(main, ["enumerate", "--n", "3",
                                  "--report", str(target)])
    assert result.exit_code == 0
    payload = json.loads(target.read_text())
    assert payload["leaf_count"] == 2177
    assert payload["leaves_by_depth"] == {"1": 1, "5": 128, "9": 2048}


def test_construct_then_verify_round_trip(runner, tmp_path):
    record = tmp_path / "locked.rec"
    built = runner.invoke(main, ["construct", "--kind", "odd-locked",
                                 "--n", "5", "--out", str(record)])
    assert built.exit_code == 0
    checked = runner.invoke(main, ["verify", "--record", str(record)])
    assert checked.exit_code == 0
    lines = dict(line.split("=", 1) for line in checked.output.splitlines())
    assert lines["legal"] == "yes"
    assert lines["class"] == "locked"
    assert lines["queens"] == "9"


def test_construct_stdout_matches_file(runner, tmp_path):
    to_stdout = runner.invoke(main, ["construct", "--kind", "frame", "--n", "4"])
    target = tmp_path / "frame.rec"
    runner.invoke(main, ["construct", "--kind", "frame", "--n", "4",
                         "--out", str(target)])
    assert to_stdout.output == target.read_text()


def test_construct_rejects_wrong_parity(runner):
    result = runner.invoke(main, ["construct", "--kind", "odd-complete",
                                  "--n", "4"])
    assert result.exit_code == 2


def test_verify_reports_illegal_record(runner, tmp_path):
    record = tmp_path / "bad.rec"
    record.write_text("n=3 variant=standard k=2\nP 1 1\nP 1 2\n")
    result = runner.invoke(main, ["verify", "--record", str(record)])
    assert result.exit_code == 1
    lines = dict(line.split("=", 1) for line in result.output.splitlines())
    assert lines["legal"] == "no"
    assert lines["moves_applied"] == "1"
    assert lines["first_illegal"] == "P 1 2"
    assert lines["rule"] == "closed"


def test_verify_claims_lines(runner):
    result = runner.invoke(main, ["verify", "--claims",
                                  "tree-bounds,solved-values", "--max-n", "3"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("CLAIM tree-bounds PASS: ")
    assert lines[1].startswith("CLAIM solved-values PASS: ")
    assert lines[2] == "all 2 claims hold"


def test_verify_unknown_claim(runner):
    result = runner.invoke(main, ["verify", "--claims", "flying-queens"])
    assert result.exit_code == 2
    assert "unknown claims" in result.output


def test_graph_summary_and_dot(runner, tmp_path):
    dot = tmp_path / "g.dot"
    result = runner.invoke(main, ["graph", "--n", "3", "--dot", str(dot)])
    assert result.exit_code == 0
    lines = dict(line.split("=", 1) for line in result.output.splitlines())
    assert lines["nodes"] == "41"
    assert lines["edges"] == "66"
    assert lines["locked"] == "5"
    assert lines["complete"] == "1"
    text = dot.read_text()
    assert text.startswith("digraph game {")
    again = tmp_path / "h.dot"
    runner.invoke(main, ["graph", "--n", "3", "--dot", str(again)])
    assert again.read_text() == text


def test_play_scripted_hotseat(runner):
    result = runner.invoke(main, ["play", "--n", "3"],
                           input="2 2\n")
    assert result.exit_code == 0
    assert "board is locked after 1 moves" in result.output
    assert "player 2 cannot move and loses" in result.output


def test_play_illegal_then_quit(runner):
    result = runner.invoke(main, ["play", "--n", "3"],
                           input="1 1\n1 2\nquit\n")
    assert result.exit_code == 0
    assert "illegal move" in result.output
    assert "goodbye" in result.output


def test_play_undo_restores_prompt(runner):
    result = runner.invoke(main, ["play", "--n", "3"],
                           input="1 1\nundo\nquit\n")
    assert result.exit_code == 0
    # after the undo it is player 1's turn again
    assert result.output.count("player 1 (row col / undo / quit)") >= 2


def test_play_against_engine_small_board(runner):
    # on 2x2 any human move locks the board; the engine never moves
    result = runner.invoke(main, ["play", "--n", "2", "--engine"],
                           input="1 1\n")
    assert result.exit_code == 0
    assert "the engine wins" not in result.output
    assert "you win" in result.output


def test_play_engine_replies(runner):
    result = runner.invoke(main, ["play", "--n", "3", "--engine"],
                           input="1 1\nquit\n")
    assert result.exit_code == 0
    assert "engine plays" in result.output
