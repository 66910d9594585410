import json
import subprocess
import sys

import pytest

from apartness.cli import main


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["exit"] == code
    return code, doc


def failed(doc):
    return [c["name"] for c in doc["checks"] if not c["passed"]]


def test_check_example2(capsys):
    code, doc = run_json(capsys, "check", "example2")
    assert code == 0
    y = doc["outputs"]["subset Y"]
    assert y["apartness_complement"] == ["c"] and y["logical_complement"] == ["b", "c"]
    assert (y["d"], y["sd"], y["qd"]) == (True, False, False)
    assert doc["outputs"]["tight"] is False
    assert len(doc["digests"]["input"]) == 64


def test_classify_example3(capsys):
    code, doc = run_json(capsys, "classify", "example3", "--rel", "alpha")
    assert code == 0 and doc["outputs"]["kind"] == "none"
    assert doc["outputs"]["apartness_complement"] == [["a", "a"], ["a", "b"], ["b", "a"], ["b", "b"], ["c", "c"]]


def test_quotient_example6_reports_co_compatibility_failure(capsys):
    code, doc = run_json(capsys, "quotient", "example6", "--rel", "tau", "--mode", "co-birkhoff")
    assert code == 1
    assert "relation-co-compatible" in failed(doc)
    assert sorted(map(sorted, doc["outputs"]["classes"])) == [["a", "b"], ["c"], ["d"], ["e"]]


def test_quotient_example1_equivalence(capsys):
    code, doc = run_json(capsys, "quotient", "example1", "--equiv", "epsilon")
    assert code == 0


def test_tse_example5(capsys):
    code, doc = run_json(capsys, "tse", "example5")
    assert code == 0
    assert doc["outputs"]["size"] == 15 and doc["outputs"]["tight"] is False


def test_cayley_example4(capsys):
    code, doc = run_json(capsys, "cayley", "example4")
    assert code == 0 and not failed(doc)


def test_iso_example5(capsys):
    code, doc = run_json(capsys, "iso", "example5", "--map", "f")
    assert code == 0 and not failed(doc)


@pytest.mark.parametrize("name", ["example1", "example-2", "example3", "example4", "example5", "example6"])
def test_examples_reproduce(capsys, name):
    code, doc = run_json(capsys, "example", "--name", name)
    assert code == 0, failed(doc)


def test_enumerate_counts(capsys):
    code, doc = run_json(capsys, "enumerate", "--size", "2", "--kind", "apartness")
    assert code == 0 and doc["outputs"]["count"] == 2


def test_fuzz_small(capsys):
    code, doc = run_json(capsys, "fuzz", "--max-size", "2", "--theorems", "sd-implies-qd,example-1",
                         "--no-timings")
    assert code == 0
    assert "seconds" not in doc["outputs"]["campaign"]


def test_usage_errors_exit_2(capsys):
    assert main(["check", "/no/such/file.json"]) == 2
    assert main(["fuzz", "--max-size", "2", "--theorems", "nope"]) == 2
    assert main(["quotient", "example1"]) == 2
    capsys.readouterr()


def test_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["check", "example2", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["outputs"]["size"] == 3


def test_text_format(capsys):
    assert main(["check", "example2"]) == 0
    text = capsys.readouterr().out
    assert "apartness-axioms" in text and "exit: 0" in text


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "apartness", "check", "example4", "--format", "json"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["checks"]
