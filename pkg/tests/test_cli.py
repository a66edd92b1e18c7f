import json
import subprocess
import sys

import pytest

from qha import cli, pathmod
from qha.families import generate

from conftest import A2, L2, N3


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


@pytest.fixture
def e41(write):
    return write(generate("example41", 10), "e41.txt")


@pytest.fixture
def e42(write):
    return write(generate("example42", 9), "e42.txt")


def test_analyze(capsys, write, e41):
    assert run_json(capsys, "analyze", e41)["algebra"]["loewyLength"] == 9
    assert run_json(capsys, "analyze", write(L2))["algebra"]["dimension"] == 2
    code, out, _ = run(capsys, "analyze", e41)
    assert code == 0 and "Loewy length 9" in out


def test_analyze_infinite(capsys, write):
    code, _, err = run(capsys, "analyze", write("vertices 1\narrow x 1 1\n"))
    assert code == 2 and "infinite-dimensional" in err


def test_analyze_bad_input(capsys, write, tmp_path):
    assert run(capsys, "analyze", write("vertices 1\nnonsense\n"))[0] == 1
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "analyze", write("vertices 1 2\narrow a 1 2\nrelation a\n"))[0] == 1


def test_usage_error_is_input_error(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_basis_limit_env(capsys, monkeypatch, e41):
    monkeypatch.setenv("QHA_BASIS_LIMIT", "10")
    code, _, err = run(capsys, "analyze", e41)
    assert code == 1 and "10" in err
    monkeypatch.setenv("QHA_BASIS_LIMIT", "lots")
    assert run(capsys, "analyze", e41)[0] == 1


def test_simples(capsys, write, e41, e42):
    rows = run_json(capsys, "simples", e41)["simples"]
    assert rows[0] == {"vertex": "1", "pd": "infinite", "id": "infinite"}
    assert run_json(capsys, "simples", e42)["simples"][0] == {"vertex": "1", "pd": 8, "id": 0}
    assert run_json(capsys, "simples", write(N3))["simples"][0] == {"vertex": "1", "pd": 2, "id": 0}


def test_layerlen(capsys, e41):
    doc = run_json(capsys, "layerlen", e41, "--V", "3,4,5,6,7,8,9")
    assert [r["ll"] for r in doc["layer"]["perProjective"]] == [2, 2] + [1] * 10
    assert doc["layer"]["llAlgebra"] == 2


def test_bounds_e41(capsys, e41):
    b = run_json(capsys, "bounds", e41, "--V", "3,4,5,6,7,8,9")["bounds"]
    assert (b["dbBound"], b["dsgBound"]) == (7, 0)
    assert b["classical"] == {"llMinus1": 8, "gldim": "infinite", "llMinus2": 7}


def test_bounds_e42(capsys, e42):
    doc = run_json(capsys, "bounds", e42, "--V", ",".join(str(i) for i in range(2, 10)))
    b = doc["bounds"]
    assert (b["d"], b["n"], b["dbBound"], b["dsgBound"]) == (1, 2, 7, 0)
    assert b["classical"] == {"llMinus1": 8, "gldim": 8, "llMinus2": 7}
    assert doc["optimize"] is None


def test_bounds_empty_V(capsys, write):
    b = run_json(capsys, "bounds", write(A2))["bounds"]
    assert b["V"] == [] and b["a"] == -1 and b["dbBound"] == 1


def test_bounds_dsg_not_applicable(capsys, e41):
    b = run_json(capsys, "bounds", e41, "--V", "1,3")["bounds"]
    assert b["dsgBound"] == "n/a" and b["dbBound"] == "infinite"


def test_bounds_unknown_vertex(capsys, e41):
    code, _, err = run(capsys, "bounds", e41, "--V", "3,99")
    assert code == 1 and "99" in err


def test_bounds_optimize(capsys, e41):
    doc = run_json(capsys, "bounds", e41, "--optimize")
    assert doc["optimize"]["bestDb"] <= 7
    assert doc["optimize"]["bestDsg"] == 0
    assert doc["bounds"]["V"] == doc["optimize"]["bestV"]


def test_report_is_deterministic(capsys, e42):
    first = run(capsys, "bounds", e42, "--optimize", "--json")[1]
    assert run(capsys, "bounds", e42, "--optimize", "--json")[1] == first
    text = run(capsys, "bounds", e42, "--V", "2,3")[1]
    assert run(capsys, "bounds", e42, "--V", "2,3")[1] == text


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "example42", "--m", "9")
    assert code == 0 and out == generate("example42", 9)
    assert run(capsys, "gen", "example41", "--m", "9")[0] == 1


def test_check_passes(capsys, write, e41):
    code, out, _ = run(capsys, "check", e41, "--seed", "1", "--cases", "50")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "check", write(L2))
    assert code == 0 and "finite-pd class layer length" in out


def test_check_catches_corrupted_engine(capsys, monkeypatch, write):
    real = pathmod.pd_simple

    def off_by_one(alg, i):
        return real(alg, i) + 1

    monkeypatch.setattr(pathmod, "pd_simple", off_by_one)
    code, out, _ = run(capsys, "check", write(N3), "--seed", "5")
    assert code == 3
    assert "FAIL cross-engine pd/id" in out
    assert "--seed 5" in out


def test_module_entry_point(tmp_path):
    path = tmp_path / "a2.txt"
    path.write_text(A2)
    res = subprocess.run([sys.executable, "-m", "qha", "analyze", str(path), "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["algebra"]["dimension"] == 3
