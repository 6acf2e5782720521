"""Brute-force reference computations.

Everything here goes through the BFS-based cost functions and plain subset
enumeration, never through the bitmask fast paths it is used to check.
"""

from fractions import Fraction
from itertools import combinations, product

from celebgame.game import player_cost, social_cost
from celebgame.graph import Graph, components, pair_list


def all_subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def brute_best_cost(game, s, u):
    others = [v for v in range(game.n) if v != u]
    return min(player_cost(game, s.replace(u, d), u).total for d in all_subsets(others))


def brute_best_response(game, s, u):
    """(cost, strategy) with the (size, lexicographic) tie-break."""
    others = [v for v in range(game.n) if v != u]
    best = None
    for d in all_subsets(others):
        c = player_cost(game, s.replace(u, d), u).total
        if best is None or c < best[0]:
            best = (c, frozenset(d))
    return best


def brute_is_ne(game, s):
    return all(player_cost(game, s, u).total == brute_best_cost(game, s, u) for u in range(game.n))


def brute_opt(game):
    pairs = pair_list(game.n)
    return min(
        social_cost(game, Graph(game.n, frozenset(p for p, bit in zip(pairs, bits) if bit)))
        for bits in product((0, 1), repeat=len(pairs))
    )


INF = float("inf")


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def brute_bridges(g):
    base = len(components(g))
    return {e for e in g.edges if len(components(g.without_edge(e))) > base}


def brute_domination_number(g):
    for d in all_subsets(range(g.n)):
        covered = set(d)
        for v in d:
            covered |= g.neighbors[v]
        if len(covered) == g.n:
            return len(d)


def as_fraction_list(xs):
    return [Fraction(x) for x in xs]
