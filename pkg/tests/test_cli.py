import json

import pytest

from polysolve.cli import main
from polysolve.sysfile import parse_system


WORKED = "p = 7\nvars = x, y\nx - y^2\ny^3 - 2\n"


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "system.txt"
    path.write_text(WORKED)
    return str(path)


def test_gb_prints_a_reparseable_system(worked_file, capsys):
    assert main(["gb", worked_file]) == 0
    out = capsys.readouterr().out
    parsed = parse_system(out)
    assert parsed.field.p == 7
    assert len(parsed.polys) == 3   # DRL basis {y^2-x, xy+5, x^2+5y}


def test_gb_lex_order(worked_file, capsys):
    assert main(["gb", worked_file, "--order", "lex"]) == 0
    out = capsys.readouterr().out
    assert "y^3 + 5" in out
    assert "6*y^2 + x" in out       # DRL-descending printing of x - y^2


def test_solve_deterministic_human_output(worked_file, capsys):
    assert main(["solve", worked_file, "--det"]) == 0
    out = capsys.readouterr().out
    assert "pipeline: deterministic" in out
    assert "x = y^2 ; y^3 = 2" in out
    assert "n = 2, D = 3, p = 7" in out
    assert "rational solutions: none in the base field" in out


def test_solve_lasvegas_human_output(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    path.write_text("p = 7\nvars = x, y\nx - y\ny^2 - y\n")
    assert main(["solve", str(path), "--lv", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "pipeline: las_vegas" in out
    assert "change of variables g" in out
    assert "rational solutions: (0, 0), (1, 1)" in out


def test_solve_json_schema(worked_file, capsys):
    assert main(["solve", worked_file, "--det", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pipeline"] == "deterministic"
    assert payload["p"] == 7
    assert payload["vars"] == ["x", "y"]
    assert payload["rep"]["parametrizations"] == [[0, 0, 1]]
    assert payload["rep"]["minimal_polynomial"] == [5, 0, 0, 1]
    assert payload["g"] is None
    assert payload["solutions"] == []
    stats = payload["stats"]
    assert stats["n"] == 2 and stats["D"] == 3
    assert set(stats) >= {"pipeline", "gb_time", "matrix_time", "chord_time",
                          "nf_count", "density", "total_time"}


def test_solve_lv_json_carries_transform(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    path.write_text("p = 7\nvars = x, y\nx - y\ny^2 - y\n")
    assert main(["solve", str(path), "--lv", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pipeline"] == "las_vegas"
    g = payload["g"]
    assert len(g) == 2 and len(g[0]) == 2
    assert sorted(map(tuple, payload["solutions"])) == [(0, 0), (1, 1)]


def test_matrices_summary(worked_file, capsys):
    assert main(["matrices", worked_file, "--summary"]) == 0
    out = capsys.readouterr().out
    assert "D = 3" in out
    assert "frontier size 3" in out
    assert "type-II members 0" in out
    assert "T_x density" in out and "T_y density" in out


def test_matrices_full_printout(worked_file, capsys):
    for method in ("fglm", "echelon"):
        assert main(["matrices", worked_file, "--method", method]) == 0
        out = capsys.readouterr().out
        assert "T_y:" in out and "T_x:" in out
        assert "0 0 2" in out


def test_matrices_free_method(worked_file, capsys):
    assert main(["matrices", worked_file, "--method", "free", "--summary"]) == 0
    out = capsys.readouterr().out
    assert "method free: computed normal forms 0" in out
    assert "T_y density" in out


def test_bench_table(capsys):
    assert main(["bench", "appendix", "--n", "3", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "deterministic" in out and "las_vegas" in out
    assert " 8 " in out   # D = 2^3


def test_bench_json(capsys):
    assert main(["bench", "appendix", "--n", "3", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["pipeline"] for r in rows] == ["deterministic", "las_vegas"]
    assert all(r["D"] == 8 for r in rows)
    det, lv = rows
    assert det["nf_count"] == 3    # 2^(3-1) - 1
    assert lv["nf_count"] == 0


def test_probbound_output(capsys):
    assert main(["probbound", "--n", "2", "--q", "65521", "--degrees", "2,2"]) == 0
    out = capsys.readouterr().out
    assert "65497/65521" in out
    assert "characteristic condition q > 3: satisfied" in out


def test_exit_code_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p = 7\nvars = x\nx + + 1\n")
    assert main(["gb", str(path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_exit_code_missing_file(capsys):
    assert main(["gb", "/nonexistent/system.txt"]) == 1
    assert "error:" in capsys.readouterr().err


def test_exit_code_non_prime(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p = 6\nvars = x\nx\n")
    assert main(["solve", str(path)]) == 2


def test_exit_code_not_zero_dimensional(tmp_path, capsys):
    path = tmp_path / "curve.txt"
    path.write_text("p = 7\nvars = x, y\nx*y\n")
    assert main(["solve", str(path)]) == 2
    assert main(["matrices", str(path)]) == 2


def test_exit_code_not_shape_position(tmp_path, capsys):
    path = tmp_path / "nsp.txt"
    path.write_text("p = 7\nvars = x, y\nx^2 - y\ny^2 - 1\n")
    assert main(["solve", str(path), "--det"]) == 2
    # the Las Vegas route handles the same input
    assert main(["solve", str(path), "--lv"]) == 0


def test_exit_code_exhausted_restarts(tmp_path, capsys):
    path = tmp_path / "fat.txt"
    path.write_text("p = 101\nvars = x, y\nx^2\ny^2\n")
    assert main(["solve", str(path), "--lv", "--max-restarts", "2"]) == 3
