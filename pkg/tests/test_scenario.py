import json

import pytest

from prenichols import scenario
from prenichols.scenario import (
    ConductorCapExceeded,
    Limits,
    Run,
    ScenarioError,
    expand_series,
    load_all,
    run_scenario,
    validate,
)

BUNDLED = load_all()


def test_expand_series():
    assert expand_series([], [1], 4) == [1, 1, 1, 1, 1]
    assert expand_series([[1, 1]], [], 3) == [1, 1, 0, 0]
    assert expand_series([[1, 1, 1]], [3], 6) == [1, 1, 1, 1, 1, 1, 1]


def test_bundled_scenarios_are_well_formed():
    assert "step2-gap" in BUNDLED
    for s in BUNDLED.values():
        assert s["anchor"]
        for r in s["runs"]:
            for c in r["checks"]:
                assert c["tag"] in scenario.TAGS


@pytest.mark.parametrize("sid", sorted(BUNDLED))
def test_bundled_scenario_passes(sid):
    results = run_scenario(BUNDLED[sid])
    failed = [r for r in results if not r.passed]
    assert results and not failed, [r.detail for r in failed]


def test_validate_rejects_bad_files():
    with pytest.raises(ScenarioError):
        validate({"id": "x", "title": "t", "source": "s"})
    with pytest.raises(ScenarioError):
        validate({"id": "x", "title": "t", "source": "s", "runs": [{"braiding": {}, "checks": [{"op": "nope", "tag": "PAPER"}]}]})
    with pytest.raises(ScenarioError):
        validate({"id": "x", "title": "t", "source": "s", "runs": [{"braiding": {}, "checks": [{"op": "gb"}]}]})


def test_failing_expectation_is_reported(tmp_path):
    s = {
        "id": "wrong",
        "title": "deliberately wrong",
        "source": "test",
        "runs": [{"braiding": {"preset": "hat_a2_omega"},
                  "checks": [{"op": "growth", "tag": "DERIVED", "expect": "Polynomial(4)"}]}],
    }
    (tmp_path / "wrong.json").write_text(json.dumps(s))
    res = run_scenario(load_all(tmp_path)["wrong"])
    assert [r.passed for r in res] == [False]


def test_conductor_cap():
    with pytest.raises(ConductorCapExceeded):
        Run({"braiding": {"qls": ["z(97)", "z(89)"]}}, Limits(conductor_cap=1000))


def test_results_json_without_timings_is_stable():
    a = [r.to_json() for r in run_scenario(BUNDLED["g2-cartan"])]
    b = [r.to_json() for r in run_scenario(BUNDLED["g2-cartan"])]
    assert a == b
    assert all("seconds" not in r for r in a)
