import json

import pytest

import uqpa


def test_relation_catalogue():
    ids = uqpa.relation_ids()
    assert len(ids) >= 25
    assert ids[0] == "eq1"
    assert "kp_periodicity" in ids


def test_single_relation():
    r = uqpa.verify("eq7", 2)
    assert r["holds"] is True
    assert r["strands"] == 3
    assert "witness" not in r


def test_unknown_relation():
    with pytest.raises(ValueError):
        uqpa.verify("eq0", 2)


def test_budget_skip():
    r = uqpa.verify("eq4", 3, budget=64)
    assert r["skipped"] is True
    assert r["holds"] is None
    with pytest.raises(ValueError):
        uqpa.commutant_dim(3, 6, budget=100)


def test_scalars():
    assert uqpa.gamma(2) == "-1"
    assert uqpa.gamma(3) == "1"
    assert uqpa.qint(3, 2) == "1"
    assert uqpa.qint(2, 2) == "0"


def test_dimensions():
    assert [uqpa.dimension(n, 2) for n in range(1, 6)] == [1, 2, 8, 32, 128]
    assert uqpa.dimension(4, 3) == 14
    assert uqpa.catalan(6) == 132
    assert uqpa.decomposition(3, 2) == "2X-_2 + 2X+_2"


def test_report_roundtrip():
    code, doc = uqpa.report_json("verify", ps=[2], relations=["eq7", "eq1"])
    assert code == 0
    assert [r["relation_id"] for r in doc] == ["eq1", "eq7"]
    code, text = uqpa.report("dims", ps=[2], max_n=4, format="csv")
    assert code == 0
    assert text.splitlines()[0].startswith("p,n,catalan,fusion,oracle")


def test_report_deterministic():
    a = uqpa.report("conjecture", ps=[2], oracle_max_n=4)
    b = uqpa.report("conjecture", ps=[2], oracle_max_n=4)
    assert a == b
    rows = json.loads(a[1])
    assert len(rows) == 10
