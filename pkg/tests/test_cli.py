import json
from math import factorial

import pytest

from multgf.cli import CORPUS, dumps, main
from multgf.holonomic import PRecurrence, rec_eval

FIB = PRecurrence([[1], [-1], [-1]], 2, [1, 1])
GEO2 = PRecurrence([[1], [-2]], 1, [2])
GEO3 = PRecurrence([[1], [-3]], 1, [3])


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_classify_phi(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "phi", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "transcendental_witness"


def test_classify_one(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "one", "--k-max", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "rational" and rep["k"] == 0
    code, out, _ = run(capsys, "classify", "--builtin", "one", "--k-max", "2")
    assert code == 0 and "rational" in out


def test_json_round_trip_is_byte_identical(capsys):
    for name in ("mu", "one", "point_support"):
        _, out, _ = run(capsys, "classify", "--builtin", name, "--format", "json")
        line = out.strip().splitlines()[-1]
        assert dumps(json.loads(line)) == line


def test_classify_non_multiplicative_table(capsys, tmp_path):
    omega = [0, 1, 1, 1, 1, 2, 1, 1, 1, 2]
    spec = write(tmp_path, "omega.json", json.dumps({"kind": "values", "values": omega}))
    code, _, err = run(capsys, "classify", "--spec", spec)
    assert code == 1 and "(2, 3)" in err


def test_classify_malformed_spec(capsys, tmp_path):
    spec = write(tmp_path, "bad.json", '{"kind": "builtin",\n "name": "phi"\n "k": 1}')
    code, _, err = run(capsys, "classify", "--spec", spec)
    assert code == 1 and "bad.json:3:" in err
    code, _, err = run(capsys, "classify", "--spec", str(tmp_path / "missing.json"))
    assert code == 1


def test_classify_inconclusive_exit(capsys):
    # below the first prime = 1 mod 60 no evaluation separates liouville from every period-60 cell
    code, out, _ = run(capsys, "classify", "--builtin", "liouville", "--prime-cap", "50", "--format", "json")
    rep = json.loads(out)
    assert code == 2 and rep["verdict"] == "inconclusive" and "50" in rep["reason"]


def test_short_table_shrinks_budget(capsys, tmp_path):
    vals = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    spec = write(tmp_path, "phi12.json", json.dumps({"kind": "values", "values": vals}))
    code, out, err = run(capsys, "classify", "--spec", spec, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["diagnostics"]["budget"]["terms"] == 12
    assert "length 12" in err


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus", "--extra", "one", "--extra", "omega", "--format", "json")
    assert code == 0
    rows = {r["function"]: r for r in json.loads(out)}
    assert all(rows[n]["verdict"] == "transcendental_witness" for n in CORPUS)
    assert rows["one"]["verdict"] == "rational"
    assert "not multiplicative" in rows["omega"]["verdict"]
    _, out2, _ = run(capsys, "corpus", "--extra", "one", "--extra", "omega", "--format", "json")
    assert out2 == out


def test_recurrence_commands(capsys, tmp_path):
    fib = write(tmp_path, "fib.rec", FIB.to_text())
    code, out, _ = run(capsys, "recurrence", "section", fib, "2", "0")
    assert code == 0
    rec = PRecurrence.from_text(out)
    assert rec.order == 2
    f = rec_eval(FIB, 40)
    assert rec_eval(rec, 20) == [f[2 * n - 1] for n in range(1, 21)]
    assert "# checked" in out

    g2, g3 = write(tmp_path, "geo2.rec", GEO2.to_text()), write(tmp_path, "geo3.rec", GEO3.to_text())
    code, out, _ = run(capsys, "recurrence", "sum", g2, g3)
    assert code == 0 and PRecurrence.from_text(out).order == 2
    code, out, _ = run(capsys, "recurrence", "product", g2, g3)
    assert code == 0 and PRecurrence.from_text(out).order == 1

    terms = write(tmp_path, "factorial.terms", "\n".join(str(factorial(n)) for n in range(1, 61)))
    code, out, _ = run(capsys, "recurrence", "guess", "--max-order", "1", "--max-degree", "1", terms)
    rec = PRecurrence.from_text(out)
    assert code == 0 and rec.order == 1
    assert rec_eval(rec, 30) == [factorial(n) for n in range(1, 31)]

    primes = write(tmp_path, "p.terms", "\n".join("1" if n in (2, 3, 5, 7, 11, 13) else "0" for n in range(1, 61)))
    code, _, _ = run(capsys, "recurrence", "guess", "--max-order", "1", "--max-degree", "1", primes)
    assert code == 2

    broken = write(tmp_path, "broken.rec", "valid_from: 1\nP_0 [1]\n")
    code, _, err = run(capsys, "recurrence", "section", broken, "2", "0")
    assert code == 1 and "broken.rec" in err


def _eq_file(tmp_path, name, equation, prefix):
    return write(tmp_path, name, json.dumps({"equation": equation, "prefix": prefix}))


def _poly(*cs):
    return [f"{c}/1" for c in cs]


def test_eisenstein(capsys, tmp_path):
    sq = _eq_file(tmp_path, "sqrt.json", [_poly(-1, -1), _poly(), _poly(1)], ["1/1", "1/2"])
    code, out, _ = run(capsys, "eisenstein", sq, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["checked_upto"] == 200
    rat = _eq_file(tmp_path, "rat.json", [_poly(0, -1), _poly(1, -1)], ["0/1", "1/1"])
    code, out, _ = run(capsys, "eisenstein", rat, "--format", "json")
    assert code == 0 and json.loads(out)["c"]["coeffs"] == ["1/1"]
    bad = _eq_file(tmp_path, "bad.json", [_poly(0, 1), _poly(-1), _poly(1)], ["0/1", "1/1", "2/1"])
    code, _, err = run(capsys, "eisenstein", bad)
    assert code == 1 and "equation" in err


def test_selfcheck_is_seeded(capsys):
    code, out, _ = run(capsys, "selfcheck", "--seed", "11", "--count", "3")
    assert code == 0 and out.startswith("seed: 11")
    _, out2, _ = run(capsys, "selfcheck", "--seed", "11", "--count", "3")
    assert out == out2


def test_bad_budget_is_input_error(capsys):
    code, _, _ = run(capsys, "classify", "--builtin", "phi", "--k-max", "0")
    assert code == 1
    with pytest.raises(SystemExit):
        main(["classify"])
