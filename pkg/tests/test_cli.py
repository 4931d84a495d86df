import json

import pytest

from seqforge.cli import main
from seqforge.families import load_pair


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("example", ["1", "2", "3"])
def test_reproduce(capsys, example):
    code, out, _ = run(capsys, "reproduce", example)
    report = json.loads(out)
    assert code == 0 and report["outputs"]["match"]
    assert set(report) == {"command", "inputs", "outputs", "timing_ms", "version"}


def test_reproduce_detects_tampering(capsys, tmp_path, monkeypatch):
    from seqforge.fixtures import fixture_dir

    for path in fixture_dir().glob("*.txt"):
        (tmp_path / path.name).write_text(path.read_text())
    text = (tmp_path / "example3.txt").read_text().replace("u: 0,", "u: 1,", 1)
    (tmp_path / "example3.txt").write_text(text)
    monkeypatch.setenv("SEQFORGE_FIXTURES", str(tmp_path))
    code, out, err = run(capsys, "reproduce", "3")
    assert code == 1
    assert "first difference at index 0" in err


def test_report_is_deterministic(capsys):
    _, first, _ = run(capsys, "cyclotomy", "29")
    _, second, _ = run(capsys, "cyclotomy", "29")
    a, b = json.loads(first), json.loads(second)
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b


def test_generate_stdout(capsys):
    code, out, _ = run(capsys, "generate", "legendre", "p=7")
    assert code == 0
    assert out.splitlines()[1] == "0,1,1,0,1,0,0"


def test_generate_to_file(capsys, tmp_path):
    path = tmp_path / "gmw.txt"
    code, out, _ = run(capsys, "generate", "gmw", "k=3", "--poly", "1000011", "-o", str(path))
    assert code == 0 and json.loads(out)["outputs"]["path"] == str(path)
    pair = load_pair(path)
    assert pair.length == 63 and pair.parameters["source_family"] == "gmw"


def test_generate_cyclotomic(capsys):
    code, out, _ = run(capsys, "generate", "cyclotomic_s1", "n=17", "--alpha", "3")
    assert code == 0
    assert out.splitlines()[1] == "0,1,0,1,1,1,0,0,0,0,0,0,1,1,1,0,1"


@pytest.mark.parametrize(
    "argv",
    [
        ("generate", "legendre", "p=8"),
        ("generate", "legendre", "q=7"),
        ("generate", "legendre", "p"),
        ("generate", "mseq", "m=5", "--poly", "1111"),
        ("spectrum", "0,1,x"),
        ("cyclotomy", "21"),
        ("cyclotomy", "17", "--alpha", "4"),
        ("verify", "T7", "n=17"),
        ("verify", "T7", "n=13", "--e", "001"),
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [("cyclotomy", "149", "--target", "y=-1"), ("verify", "T8", "n=149"),
     ("cyclotomy", "17", "--target", "y=-1")],
)
def test_unresolved_convention_exit_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "achievable" in err


def test_verify_pass(capsys):
    code, out, err = run(capsys, "verify", "T6", "k=3")
    assert code == 0 and json.loads(out)["outputs"]["all_passed"]
    assert err.count("PASS") == 4


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "T4", "p=13", "--sweep-e")
    assert code == 0 and len(json.loads(out)["outputs"]["cases"]) == 4


def test_verify_mismatch_exit_1(capsys):
    code, out, err = run(capsys, "verify", "T9", "n=13")
    assert code == 1 and "FAIL" in err
    assert not json.loads(out)["outputs"]["all_passed"]


def test_spectrum_json_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "spectrum", "0,0,0,1", "--kind", "quaternary")
    outputs = json.loads(out)["outputs"]
    assert code == 0 and outputs["optimal"] and outputs["r_max_squared"] == 4
    code, out, _ = run(capsys, "spectrum", "0,1,2,3", "--csv")
    assert out.splitlines() == ["tau,re,im", "0,4,0", "1,0,-4", "2,-4,0", "3,0,4"]


def test_spectrum_from_file(capsys, tmp_path):
    path = tmp_path / "m.txt"
    assert run(capsys, "generate", "mseq", "m=3", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "spectrum", str(path))
    outputs = json.loads(out)["outputs"]
    assert code == 0 and outputs["spectrum"][1:] == [[-1, 0]] * 6
    assert outputs["optimal"] is None


def test_cyclotomy_report(capsys):
    code, out, _ = run(capsys, "cyclotomy", "13", "--target", "y=-1")
    outputs = json.loads(out)["outputs"]
    assert code == 0 and outputs["y"] == -1 and outputs["closed_form_matches"]
