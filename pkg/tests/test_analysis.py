from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from celebgame.analysis import (
    CHECKS,
    Status,
    brute_force_optima,
    classify,
    inject_fault,
    normalized_poa,
    opt_cost,
    opt_graph,
    price_report,
    verify_theorems,
)
from celebgame.corpus import game_corpus
from celebgame.equilibrium import EquilibriumSet, enumerate_ne
from celebgame.errors import NotExhaustive
from celebgame.game import CelebrityGame, social_cost
from celebgame.graph import Graph
from oracles import brute_opt
from test_game import games


def game(weights, alpha, beta):
    return CelebrityGame.create(weights, alpha, beta)


# ---- optimum


def test_opt_expensive_links():
    assert opt_cost(game([1, 1, 1], 5, 2)) == 6
    assert brute_opt(game([1, 1, 1], 5, 2)) == 6


def test_opt_alpha_at_least_total_weight():
    g = game([1, 2, 1, 1], 5, 2)
    assert opt_cost(g) == g.total_weight * 3
    assert opt_graph(g) == Graph.empty(4)


def test_opt_beta_one_complete():
    g = game([1, 1, 1], F(3, 2), 1)
    assert opt_cost(g) == F(9, 2)
    assert opt_graph(g) == Graph.complete(3)
    assert brute_opt(g) == F(9, 2)


def test_opt_graph_examples():
    assert opt_graph(game([1, 1, 1, 1], 1, 3)) == Graph.star(4, 0)
    assert opt_graph(game([1, 1, 1], 4, 2)) == Graph.empty(3)
    assert opt_graph(game([1, 1, 1], 3, 1)) == Graph.empty(3)
    # alpha = W resolves to the empty graph
    assert opt_graph(game([1, 1, 1], 3, 2)) == Graph.empty(3)


@given(games(min_n=2, max_n=5))
def test_opt_matches_brute_force(g):
    best, winners = brute_force_optima(g)
    assert opt_cost(g) == best == brute_opt(g)
    assert social_cost(g, opt_graph(g)) == best
    assert opt_graph(g) in winners


# ---- classification


def test_classify_examples():
    c = classify(game([3, 1, 1], 2, 2))
    assert c.is_star_celebrity and c.celebrities == {0}
    c = classify(game([2, 2, 2], 5, 2))
    assert c.in_unique and not c.is_star_celebrity
    assert c.high_weight_players == {0, 1, 2}
    c = classify(game([1, 1, 1], 2, 2))
    assert c.is_star_celebrity and c.high_weight_players == frozenset()
    assert enumerate_ne(game([1, 1, 1], 2, 2)).has_graph(Graph.star(3, 0))


@given(games(max_n=6), st.integers(1, 50), st.integers(1, 50))
def test_classify_scale_invariant(g, p, q):
    k = F(p, q)
    scaled = CelebrityGame(tuple(w * k for w in g.weights), g.alpha * k, g.beta)
    assert classify(scaled) == classify(g)


@given(games(max_n=6))
def test_classify_invariants(g):
    c = classify(g)
    assert c.is_star_celebrity != c.in_unique
    expected = g.alpha < g.w_max or len(c.high_weight_players) <= 1
    assert c.is_star_celebrity == expected


# ---- prices


def test_non_star_game_prices():
    g = game([2, 2, 2], 5, 2)
    rep = price_report(g, enumerate_ne(g))
    assert rep.poa == rep.pos == F(6, 5)


def test_non_star_game_cheap_total():
    g = game([1, 1, 1], 4, 2)
    rep = price_report(g, enumerate_ne(g))
    assert rep.poa == rep.pos == 1


def test_star_game_pos_is_one():
    g = game([3, 1, 1, 1], 2, 2)
    rep = price_report(g, enumerate_ne(g))
    assert rep.pos == 1
    assert rep.pos <= rep.poa


def test_not_exhaustive_rejected():
    g = game([1, 1, 1], 2, 2)
    eq = enumerate_ne(g)
    partial = EquilibriumSet(g, eq.profiles, eq.graphs, exhaustive=False)
    with pytest.raises(NotExhaustive):
        price_report(g, partial)
    with pytest.raises(NotExhaustive):
        verify_theorems(g, partial)


def test_beta_one_tight_instance():
    g = game([2, 2, 2, 2], 2, 1)
    rep = price_report(g, enumerate_ne(g))
    assert rep.poa == 2


def test_normalized_poa():
    g = game([2, 2, 2], 5, 2)
    assert normalized_poa(g, enumerate_ne(g)) == F(6, 5) * 2 / 3


# ---- verification


def test_verify_heavy_center_game():
    g = game([3, 1, 1, 1], 2, 2)
    rep = verify_theorems(g, enumerate_ne(g))
    assert rep.passed and not rep.failures
    assert rep.status("C13") is Status.VACUOUS
    assert rep.status("C14") is Status.VACUOUS
    for cid in ("C1", "C2", "C3", "C5", "C7", "C18", "C19"):
        assert rep.status(cid) is Status.PASS, cid


def test_verify_unique_empty_game():
    g = game([2, 2, 2], 5, 2)
    rep = verify_theorems(g, enumerate_ne(g))
    assert rep.status("C4") is Status.PASS
    assert rep.status("C20") is Status.PASS
    assert rep.passed


def test_report_lists_every_check_in_order():
    g = game([1, 1, 1], 2, 2)
    rep = verify_theorems(g, enumerate_ne(g))
    assert [r.check_id for r in rep.records] == list(CHECKS) == [f"C{i}" for i in range(1, 21)]


@pytest.mark.parametrize("beta", [1, 2])
def test_injected_fault_is_caught(beta):
    g = game([3, 1, 1, 1], 2, beta)
    rep = verify_theorems(g, inject_fault(g, enumerate_ne(g)))
    assert not rep.passed
    assert rep.status("C19") is Status.FAIL
    if beta > 1:
        assert rep.status("C1") is Status.FAIL
        assert "disconnected" in rep["C1"].witness
    assert "alpha=2/1" in rep["C19"].witness


@pytest.mark.parametrize("g", list(game_corpus(seed=21, count=40, sizes=(2, 3, 4, 5), beta_mode="any")))
def test_verify_corpus_has_no_failures(g):
    rep = verify_theorems(g, enumerate_ne(g))
    assert not rep.failures, rep.failures
    if g.beta == 1:
        assert all(rep.status(c) is Status.VACUOUS for c in ("C1", "C4", "C5", "C7", "C13", "C20"))
    else:
        assert all(rep.status(c) is Status.VACUOUS for c in ("C15", "C16", "C17"))
