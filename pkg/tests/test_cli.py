import json

import pytest

from semiwilson.catalog import parse_report, validate_document
from semiwilson.cli import main

from conftest import ONE_PQ_ZERO


@pytest.fixture
def pq_file(tmp_path):
    p = tmp_path / "pq.txt"
    p.write_text("4\n" + "\n".join(" ".join(map(str, r)) for r in ONE_PQ_ZERO) + "\n")
    return p


def test_gen_writes_valid_report(tmp_path, capsys):
    out = tmp_path / "cat.json"
    assert main(["gen", "--max-order", "2", "-o", str(out)]) == 0
    doc = parse_report(out)
    validate_document(doc.to_json())
    assert doc.summary["semigroups"] == 6
    assert "6 semigroups" in capsys.readouterr().err


def test_gen_cap(capsys):
    assert main(["gen", "--max-order", "9"]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_analyze(pq_file, capsys):
    assert main(["analyze", str(pq_file)]) == 0
    data = json.loads(capsys.readouterr().out)
    zero_char = [c for ctx in data["contexts"] for c in ctx["characters"] if c["I_chi"]]
    assert zero_char[0]["P_chi"] == [1, 2]


def test_solve(pq_file, capsys):
    assert main(["solve", str(pq_file), "--g", "1:1/1;1:0/1;1:0/1;1:0/1", "--sigma", "0,2,1,3"]) == 0
    assert json.loads(capsys.readouterr().out)["dimension"] == 2
    assert main(["solve", str(pq_file), "--g", "1:1/1"]) == 2


def test_conform_single(pq_file, capsys):
    assert main(["conform", str(pq_file), "--sigma", "0,2,1,3"]) == 0
    data = json.loads(capsys.readouterr().out)
    dims = sorted((c["case"], c["family_dim"], c["oracle_dim"]) for c in data["contexts"][0]["characters"])
    assert dims == [("Case3", 1, 1), ("Case3", 2, 2)]


def test_conform_all(capsys):
    assert main(["conform", "--all", "2"]) == 0
    assert main(["conform", "--all", "2", "--inject-bug"]) == 1


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n1 9\n")
    assert main(["conform", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err
    nonassoc = tmp_path / "na.txt"
    nonassoc.write_text("2\n0 0\n1 0\n")
    assert main(["analyze", str(nonassoc)]) == 2
    assert main(["analyze", str(tmp_path / "missing")]) == 2
    assert main(["conform"]) == 2


def test_bad_automorphism(pq_file):
    assert main(["conform", str(pq_file), "--sigma", "1,0,2,3"]) == 2


def test_examples(capsys):
    assert main(["examples", "--samples", "100"]) == 0
    doc = json.loads(capsys.readouterr().out)
    validate_document(doc)
    assert len(doc["continuous"]) == 4
    assert main(["examples", "--which", "complex", "--perturb", "--samples", "50"]) == 1
    assert main(["examples", "--which", "axb", "--alpha", "0"]) == 2
    assert main(["examples", "--which", "heisenberg", "--b", "0.5i", "--samples", "20"]) == 0


def test_env_overrides(monkeypatch, capsys):
    monkeypatch.setenv("WSL_SAMPLES", "17")
    assert main(["examples", "--which", "interval"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["continuous"][0]["samples"] == 17
