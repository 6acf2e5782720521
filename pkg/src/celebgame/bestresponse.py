"""Best responses: exhaustive search, the polynomial beta = 1 rule, and a local-search heuristic.

Also builds the dominating-set reduction that makes the general problem
NP-hard, together with a brute-force minimum dominating set used to check it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InstanceTooLarge, WrongBeta
from .game import CelebrityGame, Deviations, StrategyProfile
from .graph import Graph

EXACT_LIMIT = 16
DOMINATING_SET_LIMIT = 20


class Method(str, enum.Enum):
    EXACT = "exact"
    BETA1 = "beta1"
    GREEDY = "greedy"


@dataclass(frozen=True)
class BestResponse:
    strategy: frozenset[int]
    cost: Fraction
    method: Method

    def sorted_strategy(self) -> list[int]:
        return sorted(self.strategy)


def _check_player(game: CelebrityGame, s: StrategyProfile, u: int) -> None:
    if s.n != game.n:
        raise ValueError(f"profile has {s.n} players but the game has {game.n}")
    if not 0 <= u < game.n:
        raise ValueError(f"player {u} is not in 0..{game.n - 1}")


def exact_minimum(dev: Deviations) -> tuple[frozenset[int], Fraction]:
    """Cheapest strategy for ``dev.u``; ties go to fewer links, then the lexicographically smaller set."""
    game = dev.game
    alpha = game.scaled_alpha
    others = [v for v in range(game.n) if v != dev.u]
    best_set: tuple[int, ...] = ()
    best_cost = dev.scaled_cost(())
    for k in range(1, len(others) + 1):
        # alpha * k alone already loses: larger sets cannot win either
        if alpha * k > best_cost:
            break
        for combo in combinations(others, k):
            c = dev.scaled_cost(combo)
            if c < best_cost:
                best_cost, best_set = c, combo
    return frozenset(best_set), game.unscale(best_cost)


def best_response_exact(
    game: CelebrityGame, s: StrategyProfile, u: int, limit: int = EXACT_LIMIT
) -> BestResponse:
    _check_player(game, s, u)
    if game.n > limit:
        raise InstanceTooLarge(f"exact best response limited to n <= {limit}, got n = {game.n}")
    strategy, cost = exact_minimum(Deviations.for_profile(game, s, u))
    return BestResponse(strategy, cost, Method.EXACT)


def best_response_beta1(game: CelebrityGame, s: StrategyProfile, u: int) -> BestResponse:
    """Top-k by weight.  With beta = 1 the cost only depends on which players are adjacent."""
    _check_player(game, s, u)
    if game.beta != 1:
        raise WrongBeta(f"the beta = 1 algorithm needs beta = 1, got {game.beta}")
    # players already linked to u by someone else's purchase cost nothing to reach
    linked = {x for x in range(game.n) if x != u and u in s[x]}
    candidates = sorted(
        (v for v in range(game.n) if v != u and v not in linked),
        key=lambda v: (-game.weights[v], v),
    )
    far = sum((game.weights[v] for v in candidates), Fraction(0))
    best_k, best_cost = 0, far
    running = far
    for k, v in enumerate(candidates, start=1):
        running -= game.weights[v]
        c = game.alpha * k + running
        if c < best_cost:
            best_k, best_cost = k, c
    return BestResponse(frozenset(candidates[:best_k]), best_cost, Method.BETA1)


def _local_moves(current: frozenset[int], others: list[int]):
    inside = sorted(current)
    outside = [v for v in others if v not in current]
    for x in inside:
        yield current - {x}
    for y in outside:
        yield current | {y}
    for x in inside:
        for y in outside:
            yield (current - {x}) | {y}


def best_response_greedy(game: CelebrityGame, s: StrategyProfile, u: int) -> BestResponse:
    """Steepest-descent over single drops, adds and swaps starting from the current strategy."""
    _check_player(game, s, u)
    dev = Deviations.for_profile(game, s, u)
    others = [v for v in range(game.n) if v != u]
    current = frozenset(s[u])
    current_cost = dev.cost(current)
    while True:
        best_move, best_cost = None, current_cost
        for cand in _local_moves(current, others):
            c = dev.cost(cand)
            if c < best_cost:
                best_move, best_cost = cand, c
        if best_move is None:
            return BestResponse(current, current_cost, Method.GREEDY)
        current, current_cost = best_move, best_cost


def best_response(game: CelebrityGame, s: StrategyProfile, u: int, method: Method | str) -> BestResponse:
    method = Method(method)
    if method is Method.EXACT:
        return best_response_exact(game, s, u)
    if method is Method.BETA1:
        return best_response_beta1(game, s, u)
    return best_response_greedy(game, s, u)


@dataclass(frozen=True)
class ReductionInstance:
    game: CelebrityGame
    profile: StrategyProfile
    target_player: int
    source: Graph


REDUCTION_ALPHA = Fraction(3, 2)
REDUCTION_BETA = 2
REDUCTION_WEIGHT = Fraction(2)


def build_reduction(source: Graph) -> ReductionInstance:
    """Best-response instance whose optimal answers are minimum dominating sets of ``source``.

    The source's vertices keep their labels; the new isolated player is ``source.n``.
    """
    if source.n < 1:
        raise ValueError("the source graph needs at least one vertex")
    n = source.n + 1
    game = CelebrityGame(
        (REDUCTION_WEIGHT,) * n, REDUCTION_ALPHA, REDUCTION_BETA, strict=REDUCTION_BETA <= n - 1
    )
    strategies: list[set[int]] = [set() for _ in range(n)]
    for a, b in source.edges:
        strategies[a].add(b)
    return ReductionInstance(game, StrategyProfile.of(strategies), source.n, source)


def is_dominating(g: Graph, vertices) -> bool:
    covered = 0
    adj = g.adjacency_masks
    for v in vertices:
        covered |= adj[v] | (1 << v)
    return covered == (1 << g.n) - 1


def min_dominating_set(g: Graph, limit: int = DOMINATING_SET_LIMIT) -> frozenset[int]:
    """Smallest dominating set by brute force; the lexicographically first among the smallest."""
    if g.n > limit:
        raise InstanceTooLarge(f"dominating-set search limited to n <= {limit}, got n = {g.n}")
    closed = [g.adjacency_masks[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return frozenset(combo)
    raise AssertionError("unreachable: the full vertex set dominates")
