import pytest

import quandlekit as qk


def test_alexander_six():
    q = qk.alexander("6; t^2+t+1")
    assert q.size == 36
    assert qk.check_axioms(q) is None
    assert sorted(len(c) for c in qk.components(q)) == [12, 12, 12]
    d = qk.maximal_decomposition(q)
    assert d["depth"] == 2
    assert sorted(len(b) for b in d["blocks"]) == [4] * 9
    assert len(d["levels"]) == d["depth"] + 2


def test_conjugation_quandles():
    assert sorted(len(c) for c in qk.components(qk.conj_symmetric(3))) == [1, 2, 3]
    d = qk.maximal_decomposition(qk.conj_symmetric(4))
    assert sorted(len(b) for b in d["blocks"]) == [1, 1, 1, 1, 4, 4, 6, 6]


def test_dihedral_iso():
    phi = qk.find_isomorphism(qk.alexander("3; t+1"), qk.dihedral(3))
    assert phi is not None and sorted(phi) == [0, 1, 2]
    assert qk.find_isomorphism(qk.dihedral(3), qk.conj_cyclic(3)) is None


def test_from_rows_and_axioms():
    assert qk.check_axioms(qk.Quandle.from_rows([[0, 0], [1, 1]])) is None
    bad = qk.Quandle.from_rows([[1, 0], [0, 1]])
    assert "idempot" in qk.check_axioms(bad)


def test_theory():
    r = qk.component_ideal("6; t^2+t+1")
    assert r["orbit_count"] == 3
    assert r["order"] == 12
    p = qk.prop_5_6(12, 1)
    assert p["depth"] == 2
    assert p["chain"][0] == 12


def test_errors():
    with pytest.raises(qk.ParseError):
        qk.alexander("6; t^2+*")
    with pytest.raises(qk.UnsupportedPresentation):
        qk.alexander("4; 2*t^2+t+2")


def test_verify_subset():
    results = qk.verify(["dihedral"])
    assert results and all(r["pass"] and r["criterion"] == 3 for r in results)
