import pathlib

import pytest

import keller

CORPUS = pathlib.Path(__file__).resolve().parents[2] / "corpus" / "maps.toml"


def test_shear_is_invertible():
    d = keller.analyze("x", "y + x^2")
    assert d["dossier"]["invertible"] is True
    assert d["dossier"]["deg_geo"] == 1
    assert d["theorem2"]["equivalent"] is True
    assert d["exit_code"] == 0


def test_counterexample():
    d = keller.analyze("x", "x^2 + y^3")
    assert d["dossier"]["jacobian"] == "3*y^2"
    assert d["dossier"]["regular_value"] == "SingularFiber"
    assert d["theorem2"]["applicable"] is False
    assert d["pencil"]["generic_genus"]["genus"] == 1


def test_nonproper_set():
    j = keller.jelonek("x", "y*(x*y - 1)")
    comps = j["a_f"]["components"]
    assert [c["poly"] for c in comps] == ["u"]
    assert comps[0]["is_line_through_origin"] is True
    assert j["deg_geo"] == 2


def test_resolution_counts():
    t = keller.resolve("x*y", "x + y")
    assert t["h_infinity"] + sum(t["h_b"]) == 3
    assert "graph D" in keller.dual_graph_dot("x", "y")


def test_helpers():
    assert keller.jacobian("x", "y + x^2") == "1"
    assert keller.absolute_factor_count("x^2 + y^2") == 2
    assert keller.pencil("x", "y", samples=20)["generic_r"] == 1


def test_errors():
    with pytest.raises(keller.ParseError):
        keller.resolve("x", "y +* x")
    with pytest.raises(keller.DegreeCapExceeded) as e:
        keller.resolve("x", "y^9 - x - 2")
    assert e.value.min_poly == "t^9 - 2"
    assert issubclass(keller.DegreeCapExceeded, keller.KellerError)


def test_corpus_is_deterministic():
    a, table = keller.run_corpus(CORPUS, jobs=2, seed=7)
    b, _ = keller.run_corpus(CORPUS, jobs=1, seed=7)
    assert a == b
    assert a["theorem2"]["outcome"] == "pass"
    assert a["exit_code"] == 0
    assert "stress_nonic_x" in table
