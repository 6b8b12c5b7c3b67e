import json

import pytest

from isograss import cli, verify
from isograss.forms import GroupParams
from isograss.orbits import dim_orbit

from conftest import CO, RO, SP, UN


@pytest.fixture
def corrupted_formula(monkeypatch):
    """dim_orbit off by one at a single real-orthogonal tuple."""

    def broken(case, params, t):
        value = dim_orbit(case, params, t)
        if case is RO and params == GroupParams.signed(2, 2, 1, 1) and t.entries == (0, 0, 1, 0, 0):
            return value + 1
        return value

    monkeypatch.setattr(verify, "dim_orbit", broken)


def test_corrupted_formula_is_detected(corrupted_formula, capsys):
    res = verify.suite_formula_oracle(max_dim=5)
    assert res.failed == 1 and "(0,0,1,0,0)" in res.failures[0]
    code = cli.main(["verify", "--suites", "formula-oracle,round-trip", "--max-dim", "5"])
    summary = json.loads(capsys.readouterr().out)
    assert code == 1 and not summary["ok"]
    assert [s["ok"] for s in summary["suites"]] == [True, False]


def test_corrupted_component_table_is_detected(monkeypatch):
    monkeypatch.setattr(verify, "component_count", lambda case, params, t: 1)
    assert not verify.suite_components(max_dim=4).ok


def test_broken_classifier_is_detected(monkeypatch):
    real = verify.classify

    def swapped(S):
        t = real(S)
        e = t.entries
        if S.space.case.signed and e[3] != e[4]:
            return type(t)(t.case, e[:3] + (e[4], e[3]))
        return t

    monkeypatch.setattr(verify, "classify", swapped)
    assert not verify.suite_round_trip(cases=(RO,), max_dim=4).ok


def test_group_params_enumeration():
    assert verify.group_params_up_to(RO, 4) == [GroupParams.signed(2, 2, 1, 1)]
    assert len(verify.group_params_up_to(UN, 5)) == 1 + 2 * 2
    assert verify.group_params_up_to(CO, 3) == [GroupParams.split(2, 1), GroupParams.split(3, 1),
                                                GroupParams.split(3, 2)]
    assert verify.group_params_up_to(SP, 6) == [GroupParams.split(2, 1), GroupParams.split(3, 1),
                                                GroupParams.split(3, 2)]


def test_run_suites_deterministic():
    a = [r.to_dict() for r in verify.run_suites(seed=3, trials=2, max_dim=5)]
    b = [r.to_dict() for r in verify.run_suites(seed=3, trials=2, max_dim=5)]
    assert a == b and all(r["ok"] for r in a)
    with pytest.raises(ValueError):
        verify.run_suites(["nope"])


def test_invariance_all_components_small():
    res = verify.suite_invariance(cases=(RO, CO), max_dim=4, trials=2, all_components=True)
    assert res.ok and res.checked > 0
