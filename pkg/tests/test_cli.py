import json

import pytest

from salimit.cli import main

from conftest import OMEGA3_TEXT


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_omega(capsys):
    assert run(capsys, "omega", "--n", "3") == (0, OMEGA3_TEXT + "\n")
    assert run(capsys, "omega", "--n", "0")[1] == "340^inf\n"
    assert run(capsys, "omega", "--n", "1", "--branch", "zeros")[1].startswith("31")


def test_member_and_neighbours(capsys):
    assert run_json(capsys, "member", "--word", "3122234")["member"] is True
    assert run_json(capsys, "member", "--point", "410^inf")["member"] is False
    assert run_json(capsys, "succ", "--word", "31")["successors"] == [0, 1, 2, 3]
    assert run_json(capsys, "pred", "--point", "340^inf")["predecessors"] == [2]


def test_parse_reports_blocks(capsys):
    data = run_json(capsys, "parse", "--word", "3122234")
    assert len(data["parses"]) == 1


def test_backward_and_witness(capsys):
    data = run_json(capsys, "backward", "--depth", "5")
    assert data["complete"] and data["structure_ok"]
    data = run_json(capsys, "witness", "--n-max", "2")
    assert data["depths"] == [0, 5, 13]
    assert data["structure"]["all_consistent"] and data["structure"]["levels_increasing"]


def test_backward_limit_exit_code(capsys):
    code, out = run(capsys, "backward", "--depth", "10", "--limit", "2")
    assert code == 1 and not json.loads(out)["complete"]


def test_salpha(capsys):
    data = run_json(capsys, "salpha", "--k", "2", "--N", "1")
    assert data["prefixes"] == ["23"]


def test_square_commands(capsys):
    assert run_json(capsys, "phi", "--x", "1/6")["phi"]["lo"] == "301/2592"
    data = run_json(capsys, "preimage", "--x", "8/9", "--y", "0")
    assert data["point"] == {"x": "62/81", "y": "0/1"} and data["residual"] == "0/1"
    data = run_json(capsys, "map", "--x", "62/81", "--y", "0", "--steps", "1")
    assert data["orbit"][1] == {"x": "8/9", "y": "0/1"}
    verdicts = run_json(capsys, "in-b", "--x", "1")["verdicts"]
    assert [k for k, v in verdicts.items() if v == "yes"] == ["3"]
    assert run_json(capsys, "embed", "--point", "40^inf")["e"] == "8/9"


def test_cover_and_dist(capsys):
    data = run_json(capsys, "cover", "--symbol", "3", "--depth", "2")
    assert data["symbol"] == 3
    data = run_json(capsys, "dist", "--x", "1", "--symbol", "0")
    assert data["distance"]["lo"] == data["distance"]["hi"]


def test_figure_csv(capsys):
    code, out = run(capsys, "figure", "--strip", "4", "--res", "4", "--depth", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("#") and lines[1] == "polyline,x,y"
    assert {ln.split(",")[0] for ln in lines[2:]} == {"bottom", "top", "left", "right"}


def test_output_file_is_written(tmp_path, capsys):
    target = tmp_path / "w.json"
    code, out = run(capsys, "witness", "--n-max", "1", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["depths"] == [0, 5]
    assert not [p for p in tmp_path.iterdir() if p != target]


def test_deterministic(capsys):
    a = run(capsys, "backward", "--depth", "6")
    b = run(capsys, "backward", "--depth", "6")
    assert a == b


def test_errors_exit_two(capsys):
    assert main(["succ", "--word", "44"]) == 2
    assert main(["phi", "--x", "3/2"]) == 2
    assert "error" in capsys.readouterr().err


def test_budget_environment(monkeypatch, capsys):
    monkeypatch.setenv("SALIMIT_BUDGET", "5")
    code, out = run(capsys, "backward", "--depth", "12")
    assert code == 1 and not json.loads(out)["complete"]


def test_verify_fast(capsys):
    data = run_json(capsys, "verify", "words", "--fast")
    assert data["ok"]


def test_usage_error():
    with pytest.raises(SystemExit):
        main(["omega"])
