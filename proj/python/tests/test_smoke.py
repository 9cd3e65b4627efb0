import pytest

import hhblocks as hb


def test_group_construction():
    G = hb.group("sym:4")
    assert G.order == 24
    assert G.degree == 4
    assert G.contains("(1 2)(3 4)")
    assert hb.group({"cyclic": 6}).order == 6
    assert any(e["name"] == "GL(2,3)" for e in hb.catalog())


def test_non_schur_and_replay():
    G = hb.group("sym:4")
    assert hb.is_non_schur(G, "(1 2)")
    c = hb.find_non_schur(G, 2)
    assert c["verdict"] == "holds"
    assert hb.replay(c)["ok"]
    c["witness"]["elements"]["x"] = "(1 2 3)"
    assert not hb.replay(c)["ok"]
    assert hb.find_non_schur(hb.group("cyclic:5"), 3)["verdict"] == "holds vacuously"


def test_prop36_profile_has_eight_items():
    profile = hb.prop36_profile(hb.group("alt:4"), 2)
    assert len(profile) == 8
    assert profile[5]["verdict"] == "not implemented"


def test_cor32_and_theorem_a():
    G = hb.group("sym:3")
    P = hb.subgroup(G, ["(1 2 3)"])
    assert hb.cor32(G, P, 3)["verdict"] == "holds"
    assert hb.theorem_a(G, P, 3)["verdict"] == "holds"
    assert hb.sylow_subgroup(G, 3).order == 3


def test_hh1_and_blocks():
    G = hb.group("sym:3")
    assert hb.hh1_dim(G, 2) == 2
    assert hb.hh1_dim(G, 3) == 1
    blocks = hb.blocks(G, 2)
    assert sorted(b["dimension"] for b in blocks) == [2, 4]
    assert sorted(b["hh1"] for b in blocks) == [0, 2]


def test_symmetric_witnesses():
    c = hb.an_witness(8, 2, "()")
    assert c["verdict"] == "holds"
    assert c["witness"]["elements"]["x"] == "(1 2)(3 4)"
    assert hb.replay(c)["ok"]
    s = hb.sn_witness(5, 2, "(1 2 3)")
    assert s["verdict"] == "holds"


def test_checks_and_suite():
    G = hb.group("sym:4")
    r = hb.check("centralizer_decomposition", G, 2)
    assert r["verdict"] == "pass"
    assert r["lhs"]["hh1"] == 6
    reports = hb.run_suite(max_order=6)
    assert reports and all(x["verdict"] == "pass" for x in reports)
    assert reports == hb.run_suite(max_order=6)


def test_errors():
    with pytest.raises(ValueError):
        hb.group("nosuch:3")
    with pytest.raises(ValueError):
        hb.find_non_schur(hb.group("sym:3"), 4)
    with pytest.raises(hb.BoundExceeded):
        hb.hh1_dim(hb.group("sym:5"), 2, bounds=hb.Bounds(algebra=100))
