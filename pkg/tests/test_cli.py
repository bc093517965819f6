import json
import os
import shutil

import pytest

from periodica.cli import main
from periodica.laurent import LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jones(capsys, data):
    code, out, _ = run(capsys, "jones", data("trefoil.pd"))
    assert code == 0 and out.strip() == "-1*q^9 + 1*q^5 + 1*q^3 + 1*q^1"
    code, out, _ = run(capsys, "jones", data("unknot.pd"))
    assert out.strip() == "1*q^1 + 1*q^-1"


def test_text_and_json_agree(capsys, data):
    _, text, _ = run(capsys, "jones", data("hopf.pd"))
    _, js, _ = run(capsys, "jones", data("hopf.pd"), "--format", "json")
    assert LaurentPoly.parse(json.loads(js)["jones"]) == LaurentPoly.parse(text.strip())


def test_missing_file(capsys):
    code, _, err = run(capsys, "jones", "missing.pd")
    assert code == 2 and "missing.pd" in err


def test_bad_ptc(capsys, tmp_path, data):
    bad = tmp_path / "p2.ptc"
    obj = json.load(open(data("trefoil.ptc")))
    obj["p"] = 2
    bad.write_text(json.dumps(obj))
    assert run(capsys, "dj", str(bad))[0] == 2
    garbled = tmp_path / "x.pd"
    garbled.write_text("X[1,2\n")
    assert run(capsys, "jones", str(garbled))[0] == 2


def test_dj(capsys, data):
    code, out, _ = run(capsys, "dj", data("trefoil.ptc"))
    assert code == 0 and "decomposition: PASS" in out
    code, out, _ = run(capsys, "dj", data("unlink_k1f0_p3.ptc"), "--format", "json")
    rep = json.loads(out)
    assert rep["dj"] == ["1*q^3 + 1*q^-3", "1*q^1 + 1*q^-1"]


def test_equivariant(capsys, data):
    code, out, _ = run(capsys, "equivariant", data("unlink_k1f0_p3.ptc"), "--s", "1", "--format", "json")
    assert code == 0 and json.loads(out)["equivariant"] == {"1": "1*q^1 + 1*q^-1"}
    assert run(capsys, "equivariant", data("unlink_k1f0_p3.ptc"), "--s", "4")[0] == 2


def test_kh(capsys, data):
    code, out, _ = run(capsys, "kh", data("trefoil.pd"), "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["euler_ok"] and rep["max_rank"] == 1


def test_check_trefoil_and_unknot(capsys, data):
    code, out, _ = run(capsys, "check", data("trefoil.pd"), "--p", "3", "--n", "1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and all(v["result"] == "NoObstruction" for v in rep["verdicts"])
    code, out, _ = run(capsys, "check", data("unknot.pd"), "--p", "7", "--n", "2")
    assert code == 0 and "Obstructed" not in out


def test_check_with_ranks(capsys, data):
    code, out, _ = run(capsys, "check", data("10_61.pd"), "--p", "5", "--n", "1", "--ranks", data("10_61_ranks.csv"), "--format", "json")
    rep = json.loads(out)
    assert code == 0
    by_name = {v["criterion"]: v for v in rep["verdicts"]}
    assert by_name["przytycki-example-ideal"]["result"] == "NoObstruction"
    assert by_name["strengthened"]["result"] == "Obstructed" and by_name["strengthened"]["s"] == 1
    assert rep["summary"] == "not 5-periodic"


def test_check_rejects_foreign_ranks(capsys, data):
    code, _, err = run(capsys, "check", data("trefoil.pd"), "--p", "3", "--ranks", data("10_61_ranks.csv"))
    assert code == 4 and "Euler" in err


def test_check_bad_prime(capsys, data):
    assert run(capsys, "check", data("trefoil.pd"), "--p", "4")[0] == 2


def test_murasugi(capsys, data):
    code, out, _ = run(capsys, "murasugi", data("T9_2.ptc"), "--format", "json")
    assert code == 0 and json.loads(out)["result"] == "NoObstruction"


def test_budget_exit(capsys, data, monkeypatch):
    monkeypatch.setenv("PERIODICA_BUDGET", "kh_crossings=2")
    assert run(capsys, "kh", data("trefoil.pd"))[0] == 3
    monkeypatch.delenv("PERIODICA_BUDGET")
    assert run(capsys, "jones", data("10_61.pd"), "--max-states", "64")[0] == 3


def test_threads_flag(capsys, data):
    _, a, _ = run(capsys, "jones", data("10_61.pd"), "--threads", "3")
    _, b, _ = run(capsys, "jones", data("10_61.pd"))
    assert a == b


def test_selftest_only(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "skein")
    assert code == 0 and "FAIL" not in out and "skein" in out


def test_selftest_corrupt_ranks(capsys, tmp_path, data):
    for name in ("10_61.pd", "10_61_ranks.csv"):
        shutil.copy(data(name), tmp_path / name)
    csv_path = tmp_path / "10_61_ranks.csv"
    csv_path.write_text(csv_path.read_text().replace("6,17,1", "6,17,2"))
    code, out, _ = run(capsys, "selftest", "--only", "ranks", "--corpus", str(tmp_path))
    assert code == 1 and "FAIL ranks: 10_61_ranks.csv" in out


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["jones"]) == 2
    assert main(["--help"]) == 0
