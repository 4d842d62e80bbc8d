import json

import pytest

import duoidal


def test_catalog_roundtrips_through_json():
    names = duoidal.fixture_catalog()
    assert "z3_duoidal" in names and len(names) == len(set(names))
    for name in names:
        text = duoidal._duoidal.fixture(name)
        assert json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n" == text


def test_validate_pass_and_fail():
    ok = duoidal.validate(duoidal.fixture("z3_duoidal"))
    assert ok["status"] == "pass" and ok["exit_code"] == 0
    bad = duoidal.validate(duoidal.fixture("broken_gamma"))
    assert bad["exit_code"] == 1
    failing = [c for c in bad["checks"] if c["status"] == "fail"]
    assert any(c["axiom"] == "(3)" and "counterexample" in c for c in failing)


def test_parse_error_and_budget():
    assert duoidal.validate("{}")["exit_code"] == 2
    saved = duoidal.size_budget()
    duoidal.set_size_budget(10)
    try:
        assert duoidal.validate(duoidal.fixture("finset3_duoidal"))["exit_code"] == 3
    finally:
        duoidal.set_size_budget(saved)


def test_classify_and_construct():
    assert duoidal.classify(duoidal.fixture("z2_group_bimonoid"))["result"]["hopf"] is True
    assert duoidal.classify(duoidal.fixture("absorbing_bimonoid"))["result"]["hopf"] is False
    r = duoidal.construct("from-braided", duoidal.fixture("lax_braided"))
    assert r["exit_code"] == 0
    (out,) = r["outputs"].values()
    assert duoidal.validate(out)["status"] == "pass"


def test_unknown_fixture():
    with pytest.raises(ValueError, match="z3_duoidal"):
        duoidal.fixture("nope")
