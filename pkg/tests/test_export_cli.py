import json

import pytest

from symtriple import export
from symtriple.cli import main
from symtriple.models import build, make_label, z4_grading_for
from symtriple.sts import ModelLabel


def record(label, **kw):
    return export.ExportRecord(label, build(label), z4_grading_for(label), **kw)


@pytest.mark.parametrize("label", [
    make_label("special", n=2), make_label("unitarian", p=2, q=1), make_label("quaternionic", n=1),
    ModelLabel("g2"), ModelLabel("e6su33"),
])
def test_round_trip_is_byte_identical(label):
    text = export.dumps(record(label, invariants={"envelope_dim": 1}))
    back = export.loads(text)
    assert back.system == build(label) and back.grading == z4_grading_for(label)
    assert export.dumps(back) == text


def test_schema():
    data = json.loads(export.dumps(record(make_label("symplectic", n=1), seed=5)))
    assert set(data) == set(export.SCHEMA_KEYS)
    assert data["omega"] == [[0, 1, "1"], [1, 0, "-1"]]
    assert data["seed"] == 5 and data["dim"] == 2
    assert data["trip"] == sorted(data["trip"])
    O = json.loads(export.dumps(record(make_label("orthogonal", p=3, q=0))))
    assert [0, 3, "1/2"] in O["omega"]
    with pytest.raises(ValueError):
        export.from_dict({k: v for k, v in data.items() if k != "trip"})


def test_build_command(tmp_path, capsys):
    out = tmp_path / "f4.json"
    assert main(["build", "f4", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["dim"] == 14 and data["invariants"]["inder_dim"] == 21
    capsys.readouterr()
    assert main(["build", "symplectic", "--n", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 4
    assert main(["build", "unitarian", "--p", "2", "--q", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 6


def test_build_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["build", "g2", "--out", str(a)])
    main(["build", "g2", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_commands(tmp_path, capsys):
    assert main(["verify", "g2", "--mode", "exhaustive"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["verify", "e8split", "--mode", "sampled", "--seed", "7", "--count", "300"]) == 0
    first = capsys.readouterr().out
    main(["verify", "e8split", "--mode", "sampled", "--seed", "7", "--count", "300"])
    assert capsys.readouterr().out == first and "seed 7" in first


def test_verify_mutated_json(tmp_path, capsys):
    path = tmp_path / "sp.json"
    main(["build", "symplectic", "--n", "2", "--out", str(path)])
    assert main(["verify", str(path)]) == 0
    data = json.loads(path.read_text())
    data["trip"][0][4] = "5"
    path.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL at" in out and out.rstrip().endswith("FAIL")


def test_usage_errors(tmp_path, capsys):
    assert main(["build", "e6nonsplit", "--p", "4"]) == 2
    assert main(["build", "orthogonal", "--p", "1", "--q", "1"]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", str(bad)]) == 2
    assert main(["build", "g2", "--out", str(tmp_path / "no" / "dir.json")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_table(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    assert out.count("MATCH") == 15 and "MISMATCH" not in out
    assert "e7,-5" in out and "so*12" in out
