import csv
import io
import json

import pytest

from normlab.certificates import hM_sn_norm
from normlab.scenarios import SCENARIOS, replay, run_scenario


def test_hm_rows():
    rep = run_scenario("hM", dim=1000)
    assert rep.row("||s_4||") == pytest.approx(2.0, rel=1e-11)
    for n in (10, 100, 1000):
        assert rep.row(f"||s_{n}||") == pytest.approx(hM_sn_norm(n), rel=1e-9)
    assert rep.row("residual d=0.25 n=100") == pytest.approx(
        rep.row("residual d=0.25 n=100 closed form"), abs=1e-8)


def test_hm_csv():
    rep = run_scenario("hM", dim=200)
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["label", "value", "provenance"]
    assert {r[2] for r in rows[1:]} == {"solver", "closed-form"}


def test_z_renorm_all_pass():
    rep = run_scenario("z-renorm", dim=30)
    assert rep.row("strictness probe pass") is True
    assert rep.row("asq check pass") is True
    assert rep.row("sandwich pass") is True


def test_replay_deterministic():
    rep = run_scenario("hM", dim=120, seed=3)
    again = replay(json.loads(json.dumps(rep.to_dict())))
    assert again.to_dict() == rep.to_dict()


def test_nakano_scenario_small():
    rep = run_scenario("nakano-ld2p", dim=25)
    assert rep.row("slice diameter lb dim=25") > 1.5
    assert rep.row("certificate issued") in (True, False)


@pytest.mark.slow
def test_lp_slices():
    rep = run_scenario("lp-slices", dim=8)
    for p in (1.5, 2.0, 4.0):
        assert rep.row(f"p={p} diameter lb") < rep.row(f"p={p} diameter bound")


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nope")
    assert set(SCENARIOS) == {"hM", "nakano-ld2p", "z-renorm", "lp-slices"}
