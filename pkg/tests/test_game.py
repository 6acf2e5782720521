from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from celebgame.errors import ValidationError
from celebgame.game import (
    CelebrityGame,
    Deviations,
    StrategyProfile,
    as_rational,
    delta_cost,
    outcome_graph,
    player_cost,
    profile_social_cost,
    social_cost,
    weight_component,
)
from celebgame.graph import UNREACHABLE, Graph, diameter, pair_list

weights_st = st.integers(1, 12).map(lambda k: F(k, 4))


@st.composite
def games(draw, min_n=2, max_n=6, beta=None):
    n = draw(st.integers(min_n, max_n))
    ws = draw(st.lists(weights_st, min_size=n, max_size=n))
    alpha = draw(weights_st)
    b = beta if beta is not None else draw(st.integers(1, n - 1))
    return CelebrityGame(tuple(ws), alpha, b)


@st.composite
def games_with_profile(draw, min_n=2, max_n=6, orientation=False):
    game = draw(games(min_n, max_n))
    n = game.n
    if orientation:
        code = draw(st.lists(st.integers(0, 2), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
        return game, StrategyProfile.from_encoding(n, code)
    strategies = [
        draw(st.frozensets(st.sampled_from([v for v in range(n) if v != u]))) for u in range(n)
    ]
    return game, StrategyProfile.of(strategies)


def unit(n, alpha, beta):
    return CelebrityGame((F(1),) * n, F(alpha), beta)


# ---- validation


@pytest.mark.parametrize(
    "weights, alpha, beta",
    [
        ((1,), 1, 1),
        ((1, 0), 1, 1),
        ((1, -1), 1, 1),
        ((1, 1), 0, 1),
        ((1, 1), -2, 1),
        ((1, 1, 1), 1, 0),
        ((1, 1, 1), 1, 3),
    ],
)
def test_invalid_games(weights, alpha, beta):
    with pytest.raises(ValidationError):
        CelebrityGame.create(weights, alpha, beta)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_derived_quantities():
    g = CelebrityGame.create([3, F(1, 2), 1], "3/2", 2)
    assert g.total_weight == F(9, 2)
    assert g.w_max == 3 and g.w_min == F(1, 2)
    assert g.alpha == F(3, 2)


def test_profile_rejects_self_link():
    with pytest.raises(ValidationError):
        StrategyProfile.of([{0}, set()])
    with pytest.raises(ValidationError):
        StrategyProfile.of([{5}, set()])


# ---- outcome graph


def test_double_buy_gives_one_edge():
    g = outcome_graph(StrategyProfile.of([{1}, {0}]))
    assert g.sorted_edges() == [(0, 1)]


def test_one_sided_purchase():
    assert outcome_graph(StrategyProfile.of([{1}, set()])).sorted_edges() == [(0, 1)]


def test_empty_profile_gives_empty_graph():
    assert outcome_graph(StrategyProfile.empty(4)) == Graph.empty(4)


# ---- player cost


@pytest.mark.parametrize("beta", [1, 2, 3])
def test_star_center_buying_everything(beta):
    game = CelebrityGame.create([1, 2, 3, 4], 5, beta)
    c = player_cost(game, StrategyProfile.star(4, 0, leaves_pay=False), 0)
    assert c.total == 15 and c.distance_penalty == 0


def test_leaf_of_star_with_beta_one():
    game = unit(3, 1, 1)
    s = StrategyProfile.star(3, 0, leaves_pay=True)
    c = player_cost(game, s, 1)
    assert (c.link_cost, c.distance_penalty, c.total) == (1, 1, 2)


def test_isolated_player_pays_everyone_else():
    game = CelebrityGame.create([1, 2, F(7, 3)], 1, 2)
    assert player_cost(game, StrategyProfile.empty(3), 1).total == game.total_weight - 2


# ---- social cost and weight component


@pytest.mark.parametrize("n", [3, 4, 5])
def test_named_graph_costs(n):
    game = CelebrityGame.create(range(1, n + 1), F(5, 2), 2)
    W = game.total_weight
    assert social_cost(game, Graph.star(n)) == game.alpha * (n - 1)
    assert social_cost(game, Graph.empty(n)) == W * (n - 1)
    assert social_cost(game, Graph.complete(n)) == game.alpha * n * (n - 1) / 2
    assert weight_component(game, Graph.star(n)) == 0
    assert weight_component(game, Graph.empty(n)) == (n - 1) * W


def test_path_of_four_one_far_pair():
    assert weight_component(unit(4, 1, 2), Graph.path(4)) == 2


# ---- delta cost


def test_identity_deviation_is_zero():
    game = unit(4, 2, 2)
    s = StrategyProfile.star(4, 0)
    assert delta_cost(game, s, 2, s[2]) == 0


def test_leaf_drops_its_link():
    game = CelebrityGame.create([3, 1, 2, 1], 2, 2)
    s = StrategyProfile.star(4, 0, leaves_pay=True)
    assert delta_cost(game, s, 2, set()) == -game.alpha + (game.total_weight - 2)


def test_redundant_link_costs_alpha():
    game = unit(4, F(3, 2), 2)
    s = StrategyProfile.star(4, 0, leaves_pay=True)
    assert delta_cost(game, s, 1, {0, 2}) == F(3, 2)


def test_delta_rejects_self_link():
    with pytest.raises(ValidationError):
        delta_cost(unit(3, 1, 1), StrategyProfile.empty(3), 0, {0})


# ---- profile helpers


def test_encoding_round_trip_and_canonical():
    s = StrategyProfile.of([{1, 2}, {0}, set()])
    assert s.double_buys() == [(0, 1)]
    assert not s.is_orientation()
    c = s.canonical()
    assert c == StrategyProfile.of([{1, 2}, set(), set()])
    assert StrategyProfile.from_encoding(3, c.encoding()) == c
    with pytest.raises(ValidationError):
        s.encoding()


# ---- properties


@given(games_with_profile(orientation=True))
def test_player_costs_sum_to_social_cost(gp):
    game, s = gp
    assert profile_social_cost(game, s) == social_cost(game, outcome_graph(s))


@given(games_with_profile())
def test_double_buys_only_add_link_costs(gp):
    game, s = gp
    extra = game.alpha * len(s.double_buys())
    assert profile_social_cost(game, s) == social_cost(game, outcome_graph(s)) + extra


@given(games_with_profile(), st.data())
def test_cost_ignores_redundant_double_buy(gp, data):
    game, s = gp
    u = data.draw(st.integers(0, game.n - 1))
    before = player_cost(game, s, u)
    # another player mirrors a purchase that already exists: distances are unchanged
    for x in range(game.n):
        for v in s[x]:
            if u not in (x, v) and x not in s[v]:
                mirrored = s.replace(v, s[v] | {x})
                assert player_cost(game, mirrored, u) == before
                return


@given(games(max_n=6), st.data())
def test_weight_component_monotone(game, data):
    pairs = pair_list(game.n)
    keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(game.n, frozenset(p for p, k in zip(pairs, keep) if k))
    missing = [p for p in pairs if p not in g.edges]
    assume(missing)
    e = data.draw(st.sampled_from(missing))
    assert weight_component(game, g.with_edges([e])) <= weight_component(game, g)


@given(games(max_n=6), st.data())
def test_weight_component_zero_iff_small_diameter(game, data):
    pairs = pair_list(game.n)
    keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(game.n, frozenset(p for p, k in zip(pairs, keep) if k))
    dia = diameter(g)
    assert (weight_component(game, g) == 0) == (dia is not UNREACHABLE and dia <= game.beta)


@given(games_with_profile(), st.data())
def test_fast_evaluator_matches_bfs(gp, data):
    game, s = gp
    u = data.draw(st.integers(0, game.n - 1))
    strategy = data.draw(st.frozensets(st.sampled_from([v for v in range(game.n) if v != u])))
    dev = Deviations.for_profile(game, s, u)
    assert dev.cost(strategy) == player_cost(game, s.replace(u, strategy), u).total
