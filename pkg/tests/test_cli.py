import io
import json
import subprocess
import sys

import pytest

from reflqueens import cli
from reflqueens.config import Configuration


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_exact_prints_json_lines(capsys):
    code, out, _ = run(capsys, "solve", "--n", "4")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records == [{"n": 4, "cols": [2, 4, 1, 3]}, {"n": 4, "cols": [3, 1, 4, 2]}]


def test_solve_reports_absence(capsys):
    code, out, _ = run(capsys, "solve", "--n", "6")
    assert code == 1 and out == ""


def test_solve_heuristic(capsys):
    code, out, _ = run(capsys, "solve", "--n", "40", "--method", "heuristic", "--seed", "1")
    assert code == 0
    assert len(json.loads(out)["cols"]) == 40


def test_count(capsys):
    assert run(capsys, "count", "--n", "8")[1].strip() == "n=8: 10 reflecting configurations"
    code, out, _ = run(capsys, "count", "--n", "9", "--json")
    assert code == 0 and json.loads(out) == {"n": 9, "report": {"count": 32}}


def test_verify_conflict_message(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", stdin='{"n": 2, "cols": [1, 2]}\n', monkeypatch=monkeypatch)
    assert code == 1
    assert "rows 1 and 2 share MinusDiag(0)" in out


def test_verify_json_schema(capsys, monkeypatch):
    data = '{"n": 4, "cols": [2, 4, 1, 3]}\n{"n": 2, "cols": [1, 2]}\n'
    code, out, _ = run(capsys, "verify", "--json", stdin=data, monkeypatch=monkeypatch)
    first, second = (json.loads(line) for line in out.splitlines())
    assert code == 1
    assert first == {"n": 4, "report": {"valid": True, "conflicts": []}}
    assert second == {"n": 2, "report": {"valid": False, "conflicts": [[1, 2, "MinusDiag(0)"]]}}


@pytest.mark.parametrize(
    "text",
    ['{"n": 3, "cols": [1, 1, 2]}', '{"n": 3}', "not json", '{"n": 3, "cols": [1, 2, 3], "x": 1}'],
)
def test_verify_malformed_input_names_line(capsys, monkeypatch, text):
    data = '{"n": 1, "cols": [1]}\n' + text + "\n"
    code, _, err = run(capsys, "verify", stdin=data, monkeypatch=monkeypatch)
    assert code == 2
    assert "line 2" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "absent.jsonl"))
    assert code == 2 and err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    for argv in (["count", "--n", "0"], ["weights", "--n-range", "5..3"], ["solve"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_solve_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "sols.jsonl"
    code, out, _ = run(capsys, "solve", "--n", "9")
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.count(": valid") == 32


def test_slater_output(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text(Configuration.of((2, 4, 1, 3)).to_json() + "\n")
    code, out, _ = run(capsys, "slater", "--from-config", str(path))
    assert code == 0
    assert out.strip() == "n=4 pairs (1,6),(2,8),(3,5),(4,7): valid"
    code, out, _ = run(capsys, "slater", "--from-config", str(path), "--json")
    assert json.loads(out) == {"n": 4, "report": {"pairs": [[1, 6], [2, 8], [3, 5], [4, 7]], "valid": True}}
    assert run(capsys, "slater", "--n", "6")[0] == 1


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--n-range", "3..300")
    assert code == 0 and out.strip() == "all conditions hold"
    code, out, _ = run(capsys, "weights", "--n", "9", "--json")
    report = json.loads(out)["report"]
    assert report["max_nd"] == "117/16" and report["passed"] is True
    assert report["closed_form"]["peak_corrected"] is True


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "--n", "300", "--seed", "1", "--json")
    report = json.loads(out)["report"]
    assert report["rows_cols_ok"] is True
    assert code == (0 if report["diagonals_ok"] and report["density_ok"] else 1)
    code, out, _ = run(capsys, "sample", "--n", "300", "--trials", "-1")
    assert "A x B" not in out and "rows/cols" in out


def test_pipeline_json(capsys):
    code, out, _ = run(capsys, "pipeline", "--n", "60", "--json")
    report = json.loads(out)["report"]
    assert code == 0 and report["found"] is True and len(report["cols"]) == 60
    code, out, _ = run(capsys, "pipeline", "--n", "200", "--strict-gate")
    assert code == 1 and "diagonals" in out


def test_render(capsys, monkeypatch):
    code, out, _ = run(capsys, "render", stdin='{"n": 4, "cols": [2, 4, 1, 3]}\n', monkeypatch=monkeypatch)
    lines = out.splitlines()
    assert code == 0
    assert lines[0].endswith("<- reflecting strip")
    assert lines[2:6] == ["1 | . Q . .", "2 | . . . Q", "3 | Q . . .", "4 | . . Q ."]
    big = cli.render(Configuration.of(tuple(range(1, 12))))
    assert "k mod 10" in big


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "reflqueens", "count", "--n", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "4 reflecting" in proc.stdout
