"""Smoke tests for the pybind11 module against the C++ core."""

from fractions import Fraction

import pytest

import turansw


def test_tournament_basics():
    t = turansw.Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert len(t) == 3
    assert t.edge_sign(0, 1) == 1
    assert t.edge_sign(1, 0) == -1
    assert str(t) == "T 3:a0"
    assert turansw.Tournament.parse("T 3:a0") == t
    assert len(t.automorphisms()) == 3

    switched = t.switched([0])
    assert switched.edge_sign(0, 1) == -1
    back = switched.switched([0])
    assert back == t


def test_two_graph_round_trip():
    t = turansw.Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)]).augmented()
    g = turansw.OrientedTwoGraph.of_tournament(t)
    assert str(g) == "G 4:a0"
    assert g.is_valid()
    assert g.aut_order() == 12
    rep = g.anchored_representative()
    assert turansw.OrientedTwoGraph.of_tournament(rep) == g
    assert len(g.class_members()) == 8


def test_census():
    rep = turansw.census(4)
    assert rep["tournaments"] == 4
    assert rep["switching_classes"] == 2
    assert len(turansw.enumerate_tournaments(5)) == 12


def test_paley():
    t = turansw.paley_tournament(7)
    assert turansw.is_doubly_regular(t) == (True, 3, 1)
    assert turansw.projective_two_graph(7) == turansw.paley_two_graph(7)


def test_special_search():
    res = turansw.find_special(6)
    assert len(res["special"]) == 2
    best = [s for s in res["special"] if s["best"]]
    assert best[0]["bound"] == Fraction(9, 64)
    assert best[0]["aut_order"] == 5


def test_pattern_hypergraph():
    h = turansw.pattern_hypergraph(turansw.paley_two_graph(7), turansw.paley_two_graph(3))
    assert h["n"] == 8 and h["r"] == 4
    assert len(h["edges"]) == 28


def test_expected_counts():
    g3 = turansw.paley_two_graph(3)
    assert turansw.expected_subtournaments(g3, 5) == Fraction(5, 4)
    mean, err = turansw.sample_subtournaments(g3, 5, 50000, seed=11)
    assert abs(mean - 1.25) <= 5 * err
    again = turansw.sample_subtournaments(g3, 5, 50000, seed=11, threads=1)
    assert (mean, err) == again


def test_uniqueness():
    rep = turansw.verify_uniqueness(7)
    assert rep["candidates"] == 8
    assert rep["extremal_count"] == 2
    assert rep["overall"]


def test_three_tournaments():
    g = turansw.ThreeTournament.random(5, seed=7)
    assert turansw.ThreeTournament.parse(str(g)) == g
    assert g.iso_class_count() >= 1
    assert g.aut_order() >= 1


def test_error_mapping():
    with pytest.raises(ValueError):
        turansw.paley_tournament(5)  # 5 ≡ 1 (mod 4)
    with pytest.raises(ValueError):
        turansw.census(11)
