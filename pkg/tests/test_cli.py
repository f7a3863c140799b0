import json

import pytest

from mlds.cli import main
from mlds.geometry import Point, format_points, parse_points

K3 = "0.0 0.0\n1.0 0.0\n0.5 0.8\n"


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.pts"
    path.write_text(K3)
    return path


def test_gen_random_is_reproducible(tmp_path, capsys):
    out = tmp_path / "a.pts"
    assert main(["gen", "--n", "6", "--box", "20", "--seed", "4", "-o", str(out)]) == 0
    assert main(["gen", "--n", "6", "--box", "20", "--seed", "4"]) == 0
    assert parse_points(capsys.readouterr().out) == parse_points(out.read_text())
    assert len(parse_points(out.read_text())) == 6


@pytest.mark.parametrize("flag", ["--exact", "--approx71", "--ptas", "--bb"])
def test_solve_each_solver(k3_file, capsys, flag):
    assert main(["solve", str(k3_file), flag]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["valid"] and record["size"] == 3 and record["solution"] == [0, 1, 2]


def test_solve_csv_and_solution_file(k3_file, tmp_path, capsys):
    sol = tmp_path / "k3.sol"
    assert main(["solve", str(k3_file), "--ptas", "--epsilon", "1/2", "--format", "csv",
                 "--solution-out", str(sol)]) == 0
    header, row = capsys.readouterr().out.splitlines()
    assert header == "instance_id,solver,size,valid,optimum,ratio,millis"
    assert row.split(",")[1:4] == ["ptas", "3", "true"]
    assert sol.read_text().split() == ["0", "1", "2"]


def test_verify_exit_codes(k3_file, tmp_path, capsys):
    good, bad = tmp_path / "good.sol", tmp_path / "bad.sol"
    good.write_text("0\n1\n2\n")
    bad.write_text("# too few\n0\n1\n")
    assert main(["verify", str(k3_file), str(good)]) == 0
    assert "valid: true" in capsys.readouterr().out
    assert main(["verify", str(k3_file), str(bad), "--format", "json"]) == 2
    assert json.loads(capsys.readouterr().out)["condition2_ok"] is False


def test_infeasible_exit_code(tmp_path):
    path = tmp_path / "pair.pts"
    path.write_text("0 0\n0.5 0\n")
    assert main(["solve", str(path), "--approx71"]) == 3


def test_oracle_limit_exit_code(tmp_path):
    path = tmp_path / "line.pts"
    path.write_text(format_points([Point(3 * i, 0) for i in range(30)]))
    assert main(["solve", str(path), "--exact"]) == 4
    assert main(["solve", str(path), "--exact", "--max-vertices", "40"]) == 0


def test_bad_input_exit_code(tmp_path):
    path = tmp_path / "bad.pts"
    path.write_text("1.25 0\n")
    assert main(["solve", str(path), "--bb"]) == 1


def test_reduce_corpus(tmp_path, capsys):
    from importlib import resources

    emb = tmp_path / "cycle4.emb"
    emb.write_text(resources.files("mlds").joinpath("corpus").joinpath("cycle4.emb").read_text())
    assert main(["reduce", str(emb), "--check"]) == 0
    captured = capsys.readouterr()
    assert len(parse_points(captured.out)) == 4 * (4 + 4)
    assert json.loads(captured.err) == {"vertex_cover": 2, "lds": 26, "k_offset": 24,
                                        "equal": True}


def test_bench_json(capsys):
    assert main(["bench", "--count", "4", "--solvers", "exact", "approx71", "--format",
                 "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 8 and all(r["valid"] for r in rows)


def test_gen_counterexample(capsys):
    assert main(["gen", "--counterexample", "--gadgets", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# counterexample, 1 gadget")
    assert len(parse_points(out)) > 16
