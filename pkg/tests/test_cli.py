import json

import pytest

from normlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_norm_nakano(capsys):
    code, out, _ = run(capsys, "norm", "--norm", "nakano", "--vector",
                       '{"entries": [["b",1,1.0],["b",2,1.0]]}')
    assert code == 0
    data = json.loads(out)
    assert data["value"] == pytest.approx(1.2720196495140712, rel=1e-11)
    assert data["spec"] == {"norm": "luxemburg", "modular": "nakano"}


def test_norm_config_file(capsys, tmp_path):
    cfg = tmp_path / "norm.json"
    cfg.write_text(json.dumps({"norm": "z", "base": {"norm": "lp", "p": 2}}))
    code, out, _ = run(capsys, "norm", "--config", str(cfg), "--vector",
                       '{"entries": [["t",1,0.5]]}')
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(0.5, rel=1e-11)


@pytest.mark.parametrize("argv", [
    ["norm", "--norm", "nakano", "--vector", "{not json"],
    ["norm", "--config", '{"norm": "bogus"}', "--vector", '{"entries": []}'],
    ["norm", "--norm", "sup", "--vector", '{"entries": [["q",1,1.0]]}'],
    ["probe", "slice", "--alpha", "x:1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_engine_error_exit_3(capsys):
    code, _, err = run(capsys, "asq", "--random", "1", "--dim", "3", "--eps", "0.01",
                       "--search-dim", "10")
    assert code == 3
    assert "BudgetExceeded" in err


def test_probe_usm_sup(capsys):
    code, out, _ = run(capsys, "probe", "usm", "--norm", "sup", "--eps", "0.5", "--dim", "6",
                       "--budget", "2")
    assert code == 0
    data = json.loads(out)
    assert data["E_estimate"] == pytest.approx(1.0)
    assert data["seed"] == 0 and data["prng"] == "numpy.PCG64"


def test_probe_monotone_counterexample_is_success(capsys):
    code, out, _ = run(capsys, "probe", "monotone", "--norm", "sup", "--trials", "10")
    assert code == 0
    assert json.loads(out)["status"] == "CounterExample"


def test_certify_inconclusive_exit_0(capsys):
    code, out, _ = run(capsys, "certify", "ld2p", "--norm", "nakano", "--dim", "100")
    assert code == 0
    assert json.loads(out)["status"] == "inconclusive"


def test_certify_explain(capsys):
    code, out, _ = run(capsys, "certify", "symmetric", "--norm", "lp", "--p", "2", "--dim", "8",
                       "--explain")
    data = json.loads(out)
    assert code == 0 and data["status"] == "certificate"
    assert data["explain"][-1].endswith("< 2")


def test_asq_random(capsys):
    code, out, _ = run(capsys, "asq", "--random", "3", "--dim", "10", "--eps", "0.05")
    data = json.loads(out)
    assert code == 0 and data["check"] is True
    assert data["max_norm_z_plus_h"] <= 1.05


def test_scenario_csv(capsys):
    code, out, _ = run(capsys, "scenario", "hM", "--dim", "100", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "label,value,provenance"
    assert "||s_4||,2" in out


def test_normlab_tol_env(capsys, monkeypatch):
    monkeypatch.setenv("NORMLAB_TOL", "1e-6")
    code, out, _ = run(capsys, "norm", "--norm", "orlicz-m", "--vector",
                       '{"entries": [["b",1,1],["b",2,1],["b",3,1],["b",4,1]]}')
    data = json.loads(out)
    assert code == 0 and data["tol"] == 1e-6
    assert data["value"] == pytest.approx(2.0, rel=1e-6)


@pytest.mark.parametrize("bad", ["abc", "-1"])
def test_normlab_tol_invalid(capsys, monkeypatch, bad):
    monkeypatch.setenv("NORMLAB_TOL", bad)
    assert run(capsys, "scenario", "hM", "--dim", "10")[0] == 2


def test_deterministic_output(capsys):
    argv = ["probe", "slice", "--norm", "day", "--dim", "5", "--budget", "50", "--seed", "4"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
