import io
import json

import pytest

from schubert import cli
from schubert.kp import QPolynomial, h_to_x, schur_h

KLEIN = {"rank": 2, "coeffs": [{"partition": [], "coeff": "1"}, {"partition": [2, 2], "coeff": "1"}]}


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_decomposable_vacuum(capsys, monkeypatch):
    code, out, _ = run(["decomposable"], capsys, json.dumps({"rank": 2, "coeffs": [{"partition": [], "coeff": "1"}]}), monkeypatch)
    assert code == 0
    report = json.loads(out)
    assert report["agree"] and report["decomposable"]


def test_decomposable_klein(capsys, tmp_path):
    code, out, _ = run(["decomposable", "--input", write(tmp_path, "k.json", KLEIN)], capsys)
    assert code == 1
    assert json.loads(out) == {"theorem2": False, "classical": False, "theorem1": False,
                               "agree": True, "decomposable": False}


def test_random_gen_piped_into_decomposable(capsys, monkeypatch):
    code, out, _ = run(["random-gen", "--r", "3", "--n", "6", "--seed", "9", "--count", "4"], capsys)
    assert code == 0 and len(out.splitlines()) == 4
    code2, out2, _ = run(["decomposable"], capsys, out, monkeypatch)
    assert code2 == 0 and all(json.loads(ln)["decomposable"] for ln in out2.splitlines())


def test_random_gen_is_deterministic(capsys):
    argv = ["random-gen", "--r", "2", "--n", "5", "--seed", "3", "--count", "3"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]
    other = run(["random-gen", "--r", "2", "--n", "5", "--seed", "4", "--count", "3"], capsys)[1]
    assert other != run(argv, capsys)[1]


@pytest.mark.parametrize("text", ["{bad", "[]", '{"rank": 2}', '{"rank": 0, "coeffs": []}', ""])
def test_decomposable_malformed_input(capsys, monkeypatch, text):
    code, out, err = run(["decomposable"], capsys, text, monkeypatch)
    assert code == 64 and out == "" and "error" in err


def test_disagreement_exit_code(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("schubert.pluecker.theorem2_check", lambda t: True)
    code, out, _ = run(["decomposable", "--input", write(tmp_path, "k.json", KLEIN)], capsys)
    assert code == 2 and json.loads(out)["agree"] is False


def test_ideal_text(capsys):
    code, out, _ = run(["ideal", "--r", "2", "--n", "4"], capsys)
    assert code == 0 and out == "a[1,1]*a[2] - a[1]*a[2,1] + a[]*a[2,2]\n"
    code, out, _ = run(["ideal", "--r", "2", "--n", "5", "--format", "text"], capsys)
    assert code == 0 and len(out.splitlines()) == 5


def test_ideal_json(capsys):
    code, out, _ = run(["ideal", "--r", "2", "--n", "4", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["r"] == 2 and len(doc["quadrics"]) == 1
    assert doc["quadrics"][0]["terms"][2] == {"left": [], "right": [2, 2], "coeff": "1"}


def test_ideal_empty_and_errors(capsys):
    assert run(["ideal", "--r", "1", "--n", "5"], capsys)[:2] == (0, "")
    code, out, err = run(["ideal", "--r", "3", "--n", "2"], capsys)
    assert code == 64 and out == ""
    assert run(["ideal", "--r", "x", "--n", "2"], capsys)[0] == 64
    assert run(["ideal", "--r", "2"], capsys)[0] == 64
    assert run([], capsys)[0] == 64


def test_kp_check(capsys, tmp_path):
    one = write(tmp_path, "one.json", QPolynomial.constant("x", 1, 8).to_json())
    s21 = write(tmp_path, "s21.json", h_to_x(schur_h((2, 1), 8)).to_json())
    klein = write(tmp_path, "klein.json", (schur_h((2, 2), 8) + 1).to_json())
    code, out, _ = run(["kp-check", "--tau", one, "--weight", "8"], capsys)
    assert code == 0 and "up to weight 8" in out
    assert run(["kp-check", "--tau", s21, "--weight", "8"], capsys)[0] == 0
    code, out, _ = run(["kp-check", "--tau", klein, "--weight", "8"], capsys)
    assert code == 1 and "first nonzero coefficient" in out


def test_kp_check_errors(capsys, tmp_path):
    klein = write(tmp_path, "klein.json", (schur_h((2, 2), 8) + 1).to_json())
    code, out, _ = run(["kp-check", "--tau", klein, "--weight", "3"], capsys)
    assert code == 64 and out == ""
    assert run(["kp-check", "--tau", str(tmp_path / "missing.json"), "--weight", "3"], capsys)[0] == 64
    assert run(["kp-check", "--tau", klein, "--weight", "0"], capsys)[0] == 64


def test_output_flag(capsys, tmp_path):
    target = tmp_path / "q.txt"
    code, out, _ = run(["ideal", "--r", "2", "--n", "4", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text().startswith("a[1,1]*a[2]")


def test_selftest_and_mutation(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0 and out.strip().endswith("11/11 criteria passed")
    code, out, _ = run(["selftest", "--mutate", "h-recurrence"], capsys)
    assert code != 0 and "[FAIL]" in out
