import io
import json

import pytest

from wdg.cli import main


def run(*args):
    out = io.StringIO()
    code = main(list(args), out=out)
    return code, out.getvalue()


def test_enumerate_a2():
    code, text = run("enumerate", "--type", "A", "--rank", "2")
    assert code == 0 and len(text.splitlines()) == 3
    rec = json.loads(text.splitlines()[0])
    assert {"weights", "odd", "special", "phi1", "phi2"} <= set(rec)


def test_enumerate_filters():
    _, full = run("enumerate", "--type", "C", "--rank", "3")
    _, some = run("enumerate", "--type", "C", "--rank", "3", "--odd", "--special")
    rows = [json.loads(x) for x in some.splitlines()]
    assert 0 < len(rows) < len(full.splitlines())
    assert all(r["odd"] and r["special"] for r in rows)


def test_enumerate_d4_variants():
    _, text = run("enumerate", "--type", "D", "--rank", "4")
    assert {json.loads(x)["d_variant"] for x in text.splitlines()} == {None, "plus", "minus"}


def test_construct_then_gram(tmp_path):
    code, text = run("construct", "--type", "A", "--rank", "2", "--mu", "2,1")
    assert code == 0
    path = tmp_path / "lam.json"
    path.write_text(text)
    code, text = run("gram", "--type", "A", "--rank", "2", "--mu", "2,1", "--lambda", str(path))
    rec = json.loads(text)
    assert code == 0 and rec["det"] in (1, -1) and rec["unimodular"] and rec["order"] == 2


def test_gram_zero_lambda(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text('{"ring": "Z", "values": []}')
    _, text = run("gram", "--type", "A", "--rank", "2", "--mu", "2,1", "--lambda", str(path))
    assert json.loads(text)["det"] == 0


def test_gram_gf2_c2(tmp_path):
    path = tmp_path / "lam.json"
    path.write_text('{"ring": "Z", "values": [{"root": [2, 0], "value": 1}]}')
    _, text = run("gram", "--type", "C", "--rank", "2", "--mu", "1", "--nu", "1", "--ring", "gf2", "--lambda", str(path))
    assert json.loads(text)["det"] == 0


def test_gram_bad_lambda(tmp_path):
    path = tmp_path / "lam.json"
    path.write_text('{"ring": "Z", "values": [{"root": [1, -1, 0], "value": 1}]}')
    assert run("gram", "--type", "A", "--rank", "2", "--mu", "2,1", "--lambda", str(path))[0] == 2
    path.write_text("not json")
    assert run("gram", "--type", "A", "--rank", "2", "--mu", "2,1", "--lambda", str(path))[0] == 2


def test_construct_not_special(capsys):
    code, _ = run("construct", "--type", "B", "--rank", "4", "--mu", "2,2", "--nu", "1")
    assert code == 2
    assert "not special" in capsys.readouterr().err


def test_verify_exit_codes_and_header():
    code, text = run("verify", "--type", "C", "--rank", "4", "--seed", "0")
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 0
    assert lines[0]["kind"] == "header" and lines[0]["seed"] == 0
    assert lines[-1] == {"kind": "summary", "total": len(lines) - 2, "failed": 0}


def test_verify_deterministic():
    a = run("verify", "--type", "B", "--rank", "3", "--exhaustive-cap", "0")
    b = run("verify", "--type", "B", "--rank", "3", "--exhaustive-cap", "0", "--jobs", "2")
    assert a == b


def test_verify_seed_from_env(monkeypatch):
    monkeypatch.setenv("WDG_SEED", "11")
    _, text = run("verify", "--type", "A", "--rank", "2")
    assert json.loads(text.splitlines()[0])["seed"] == 11
    _, text = run("verify", "--type", "A", "--rank", "2", "--seed", "3")
    assert json.loads(text.splitlines()[0])["seed"] == 3


@pytest.mark.parametrize("fmt", ["csv", "pretty"])
def test_verify_formats(fmt):
    code, text = run("verify", "--type", "C", "--rank", "3", "--format", fmt)
    assert code == 0 and text


def test_reduce():
    code, text = run("reduce", "--type", "A", "--rank", "4", "--mu", "5")
    rec = json.loads(text)
    assert code == 0 and rec["reduced"] == [1] and rec["chain"][0]["divisors"] == [5]


@pytest.mark.parametrize("args", [
    ["enumerate", "--type", "E", "--rank", "3"],
    ["enumerate", "--type", "B", "--rank", "1"],
    ["construct", "--type", "A", "--rank", "3", "--mu", "3,3"],
    ["construct", "--type", "A", "--rank", "3", "--mu", "x"],
    ["verify", "--type", "A", "--rank", "3", "--jobs", "0"],
    [],
])
def test_usage_errors(args):
    assert run(*args)[0] == 2


def test_selftest():
    code, text = run("selftest")
    assert code == 0 and "FAIL" not in text
