import json

import pytest

from twave.cli import main

SAMPLE_START = "PGGG/GPPG/GPGG/GPPP/PPGP"
SAMPLE_AFTER_COL2 = "PGPG/PPPP/GPPG/PPPP/PPPP"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_json(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PPG/GGP")
    code, out, _ = run(capsys, "solve", f, "--json")
    assert code == 0
    body = json.loads(out)
    assert body["grundy"] == "*2"
    assert body["outcome"] == "N"
    assert body["best_move"] == 2
    assert body["depth"] <= 3


def test_solve_human_readable(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", '{"ruleset":"nim","heaps":[2,2]}')
    code, out, _ = run(capsys, "solve", f)
    assert code == 0
    assert "grundy: *0" in out
    assert "outcome: P" in out


def test_moves_lists_feasible_columns(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", SAMPLE_START)
    code, out, _ = run(capsys, "moves", f, "--json")
    assert code == 0
    assert json.loads(out) == {"moves": [0, 1, 2, 3]}


def test_apply_writes_the_successor_document(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", SAMPLE_START)
    code, out, _ = run(capsys, "apply", f, "--move", "2")
    assert code == 0
    body = json.loads(out)
    assert body["rows"] == SAMPLE_AFTER_COL2.split("/")


def test_apply_infeasible_move_exits_3(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PP/PP")
    code, _, err = run(capsys, "apply", f, "--move", "0")
    assert code == 3
    assert "not feasible" in err


def test_parse_error_exits_2(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PG/GPX")
    code, _, err = run(capsys, "solve", f)
    assert code == 2
    assert "row 2, column 3" in err


def test_budget_exhaustion_exits_4(tmp_path, capsys):
    from twave.solver import clear_memo

    clear_memo()  # the session-wide table would satisfy this solve for free
    f = write(tmp_path, "pos.txt", "GGGG/GGGG/GGGG/GGGG")
    code, _, err = run(capsys, "solve", f, "--budget-nodes", "2")
    assert code == 4
    assert "budget" in err


def test_triangle_against_oracle(capsys):
    code, out, _ = run(capsys, "triangle", "--max-rows", "4", "--oracle")
    assert code == 0
    assert "!" not in out  # no formula/oracle disagreements
    assert "*2/*2" in out


def test_convert_to_avoid_true(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PPG/GGP")
    code, out, _ = run(capsys, "convert", f, "--to", "avoid_true", "--json")
    assert code == 0
    body = json.loads(out)
    assert body["document"]["ruleset"] == "avoid_true"
    assert body["move_bijection"] == {"0": 1, "1": 2, "2": 3}


def test_convert_unknown_pair_exits_2(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", '{"ruleset":"avoid_true","vars":1,"clauses":[[1]],"true_set":[]}')
    code, _, err = run(capsys, "convert", f, "--to", "node_kayles")
    assert code == 2
    assert "no registered transformer" in err


def test_verify_samples(capsys):
    code, out, _ = run(
        capsys, "verify", "--reduction", "grid_to_and",
        "--samples", "5", "--seed", "7",
    )
    assert code == 0
    assert "5/5 passed" in out


def test_verify_single_file(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PPG/GGP")
    code, out, _ = run(capsys, "verify", "--reduction", "grid_to_and", "--file", f)
    assert code == 0
    assert "ok grid_to_and[0] *2 -> *2" in out


def test_qnim_outcome(tmp_path, capsys):
    f = write(
        tmp_path, "pos.txt",
        '{"ruleset":"demi_quantum_nim","realizations":[[2,2]]}',
    )
    code, out, _ = run(capsys, "qnim", f, "--json")
    assert code == 0
    body = json.loads(out)
    assert body["outcome"] == "N"
    assert body["winning_move"] == [[-1, 0], [0, -1]]


def test_qnim_rejects_plain_grids(tmp_path, capsys):
    f = write(tmp_path, "pos.txt", "PPG/GGP")
    code, _, err = run(capsys, "qnim", f)
    assert code == 2
    assert "demi_quantum_nim" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent/file.txt")
    assert code == 2
