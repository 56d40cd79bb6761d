from fractions import Fraction

import pytest

import treetp

STAR4 = [[130, 78, 98, 96], [90, 108, 34, 25], [116, 57, 137, 44], [55, 1, 39, 112]]


def test_exact_results_are_fractions():
    assert treetp.det(STAR4) == 5574784
    assert isinstance(treetp.det(STAR4), Fraction)
    assert treetp.det([[Fraction(1, 2), "1/3"], [1, 1]]) == Fraction(1, 6)
    assert treetp.minor(STAR4, [3, 1, 4], [2, 1, 4]) == -290240
    assert treetp.char_poly(STAR4) == [5574784, -2376010, 61299, -487, 1]


def test_adjugate_of_the_4x4_example():
    adj = treetp.adjugate(STAR4)
    assert adj[0] == [1308414, -641920, -560896, -757860]
    assert adj[2][1] == 290240
    assert treetp.adjoint_mismatches(STAR4, "star:4") == []


def test_sylvester_identity():
    assert treetp.sylvester_rhs(STAR4, [3, 1, 4], [2, 1, 4]) == -290240


def test_tree_helpers():
    assert treetp.tree_signing("pitchfork") == [1, -1, -1, -1, 1]
    assert treetp.maximal_paths("star:4") == [[2, 1, 3], [2, 1, 4], [3, 1, 4]]
    assert len(treetp.enumerate_trees(4)) == 16
    assert treetp.tree_edges((3, [(2, 1), (2, 3)])) == [(1, 2), (2, 3)]


def test_check_reports():
    assert treetp.is_t_tp(STAR4, "star:4")["verdict"] is True
    report = treetp.check(treetp.fixture_matrix("star5-counterexample"), "star:5", augmented=True)
    assert report["verdict"] is False
    assert report["pendant_witness"]["pendant"] == 3
    assert report["pendant_witness"]["value"] == "-5017752"
    assert treetp.is_tp([[1, 0], [0, 1]])["verdict"] is False


def test_spectral_summary():
    s = treetp.smallest_eig_vector(STAR4, "star:4")
    assert s["smallest"]["is_real"]
    assert abs(s["smallest"]["value"]["re"] - 2.5) < 0.05
    assert s["signed_ok"] == "yes"


def test_conjecture_and_search():
    v = treetp.test_conjecture(treetp.fixture_matrix("pitchfork-counterexample"), "pitchfork")
    assert v["counterexample"] is True
    r = treetp.search("star:4", 20, seed=3, threads=2)
    assert r["counterexamples"] == 0
    assert r["hypothesis_pass"] == r["conclusion_pass"] + r["counterexamples"] + r["undecided"]
    assert treetp.search("star:4", 20, seed=3) == r


def test_fixtures_reproduce():
    for name in treetp.fixture_names():
        assert treetp.reproduce(name)["ok"], name


def test_errors():
    with pytest.raises(ValueError):
        treetp.det([[1, 2]])
    with pytest.raises(treetp.ParseError):
        treetp.det([["1/0"]])
    with pytest.raises(treetp.ParseError):
        treetp.is_t_tp(STAR4, "wheel:4")
    with pytest.raises(ValueError):
        treetp.is_t_tp(STAR4, "star:5")
