import json
import os

import pytest

from mcgrep.cli import main
from mcgrep.linalg import Proportional, SparseOperator
from mcgrep.scalars import CycScalar


def read_matrix(path, r):
    data = json.loads(path.read_text())
    cols = {}
    for i, j, v in data["entries"]:
        cols.setdefault(j, {})[i] = CycScalar.from_json(r, v)
    return data, SparseOperator(r ** (3 * data["g"]), cols, CycScalar.from_int(r, 1))


def test_verify_exit_codes(capsys):
    assert main(["verify", "--suite", "adjoint"]) == 0
    assert "checks passed" in capsys.readouterr().out
    assert main(["verify", "--r", "4"]) == 2
    assert "r must be odd" in capsys.readouterr().err
    assert main(["verify", "--g", "0"]) == 2
    assert main(["verify", "--jobs", "0"]) == 2


def test_size_guard(monkeypatch, capsys):
    assert main(["iso", "--r", "11", "--g", "2"]) == 2
    assert "--force" in capsys.readouterr().err
    monkeypatch.setenv("MCGREP_MAX_DIM", "10")
    assert main(["iso"]) == 2
    monkeypatch.setenv("MCGREP_MAX_DIM", "ten")
    assert main(["iso"]) == 2


def test_verify_json(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", "--suite", "heisenberg", "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["passed"] and data["reports"][0]["suite"] == "heisenberg"


def test_report_is_deterministic_and_atomic(tmp_path):
    a, b = tmp_path / "a.md", tmp_path / "b.md"
    assert main(["report", "--out", str(a)]) == 0
    assert main(["report", "--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("# Verification report")
    assert sorted(os.listdir(tmp_path)) == ["a.md", "b.md"]


def test_report_json_by_extension(tmp_path):
    out = tmp_path / "r.json"
    assert main(["report", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["passed"]


def test_twist_empty_word_is_identity(tmp_path):
    out = tmp_path / "t.json"
    assert main(["twist", "--word", "", "--out", str(out)]) == 0
    data, M = read_matrix(out, 3)
    assert data["basis"] == "ETF-lex"
    assert M == SparseOperator.identity(27, CycScalar.from_int(3, 1))


def test_twist_csv_rows(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["twist", "--word", "a1", "--format", "csv", "--out", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()]
    assert all(len(row) == 3 and row[0].isdigit() and row[1].isdigit() for row in rows)
    assert ["0", "0", "1"] in rows
    assert any("ζ" in row[2] for row in rows)


def test_twist_bad_word(capsys):
    assert main(["twist", "--word", "a2"]) == 2
    assert main(["twist", "--word", "x1"]) == 2


def test_homological_word_conjugates_to_quantum(tmp_path):
    hom, quant = tmp_path / "h.json", tmp_path / "q.json"
    word = "(a1 b1)^3"
    assert main(["twist", "--side", "homological", "--conjugate-phi", "--word", word, "--out", str(hom)]) == 0
    assert main(["twist", "--side", "quantum", "--word", word, "--out", str(quant)]) == 0
    dh, H = read_matrix(hom, 3)
    dq, Q = read_matrix(quant, 3)
    assert dh["basis"] == dq["basis"] == "ETF-lex"
    assert isinstance(H.compare_projective(Q), Proportional)


def test_iso_export(capsys):
    assert main(["iso"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dims"] == [27, 27]


def test_unwritable_output(tmp_path, capsys):
    assert main(["iso", "--out", str(tmp_path / "missing" / "x.json")]) == 1
    assert "I/O error" in capsys.readouterr().err


def test_argparse_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope"])
