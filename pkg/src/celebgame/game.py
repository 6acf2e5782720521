"""Celebrity games: instances, strategy profiles, player and social cost.

All money and weight quantities are :class:`fractions.Fraction` values, so
comparisons such as ``alpha == w_u`` are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ValidationError
from .graph import (
    Graph,
    UNREACHABLE,
    all_pairs_distances,
    ball_mask,
    bfs_distances,
    norm_edge,
    pair_index,
    pair_list,
)

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class CelebrityGame:
    """A game <V, (w_u), alpha, beta> on players ``0..n-1``.

    ``strict=False`` skips only the ``beta <= n-1`` bound; it exists for the
    dominating-set reduction on a single-vertex source, where the two-player
    game still needs beta = 2.
    """

    weights: tuple[Fraction, ...]
    alpha: Fraction
    beta: int
    strict: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in self.weights))
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        n = len(self.weights)
        if n < 2:
            raise ValidationError(f"a game needs n >= 2 players, got {n}")
        for u, w in enumerate(self.weights):
            if w <= 0:
                raise ValidationError(f"weight of player {u} must be > 0, got {w}")
        if self.alpha <= 0:
            raise ValidationError(f"alpha must be > 0, got {self.alpha}")
        if not isinstance(self.beta, int) or isinstance(self.beta, bool):
            raise ValidationError(f"beta must be an integer, got {self.beta!r}")
        if self.beta < 1:
            raise ValidationError(f"beta must be >= 1, got {self.beta}")
        if self.strict and self.beta > n - 1:
            raise ValidationError(f"beta must be <= n-1 = {n - 1}, got {self.beta}")

    @classmethod
    def create(cls, weights: Iterable, alpha, beta: int) -> CelebrityGame:
        return cls(tuple(weights), alpha, beta)

    @property
    def n(self) -> int:
        return len(self.weights)

    @cached_property
    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def w_max(self) -> Fraction:
        return max(self.weights)

    @property
    def w_min(self) -> Fraction:
        return min(self.weights)

    @cached_property
    def scale(self) -> int:
        """Common denominator of alpha and the weights; scaled values are exact integers."""
        return math.lcm(self.alpha.denominator, *(w.denominator for w in self.weights))

    @cached_property
    def scaled_alpha(self) -> int:
        return int(self.alpha * self.scale)

    @cached_property
    def scaled_weights(self) -> tuple[int, ...]:
        return tuple(int(w * self.scale) for w in self.weights)

    @cached_property
    def _mask_weights(self) -> dict[int, int]:
        return {}

    def mask_weight_scaled(self, mask: int) -> int:
        """Scaled total weight of the players whose bits are set in ``mask`` (memoized)."""
        cache = self._mask_weights
        w = cache.get(mask)
        if w is None:
            w = 0
            m = mask
            ws = self.scaled_weights
            while m:
                low = m & -m
                w += ws[low.bit_length() - 1]
                m ^= low
            cache[mask] = w
        return w

    def mask_weight(self, mask: int) -> Fraction:
        return Fraction(self.mask_weight_scaled(mask), self.scale)

    def unscale(self, value: int) -> Fraction:
        return Fraction(value, self.scale)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class StrategyProfile:
    """Per-player sets of bought links.  Double purchases are representable."""

    strategies: tuple[frozenset[int], ...]

    def __post_init__(self):
        strategies = tuple(frozenset(s) for s in self.strategies)
        n = len(strategies)
        for u, s in enumerate(strategies):
            if u in s:
                raise ValidationError(f"player {u} cannot buy a link to itself")
            for v in s:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValidationError(f"player {u} buys a link to unknown player {v!r}")
        object.__setattr__(self, "strategies", strategies)

    @classmethod
    def of(cls, strategies: Sequence[Iterable[int]]) -> StrategyProfile:
        return cls(tuple(frozenset(s) for s in strategies))

    @classmethod
    def empty(cls, n: int) -> StrategyProfile:
        return cls(tuple(frozenset() for _ in range(n)))

    @classmethod
    def lower_buys(cls, g: Graph) -> StrategyProfile:
        """Orientation of ``g`` in which the lower-indexed endpoint pays."""
        s: list[set[int]] = [set() for _ in range(g.n)]
        for u, v in g.edges:
            s[u].add(v)
        return cls.of(s)

    @classmethod
    def star(cls, n: int, center: int, leaves_pay: bool = True) -> StrategyProfile:
        s: list[set[int]] = [set() for _ in range(n)]
        for v in range(n):
            if v == center:
                continue
            if leaves_pay:
                s[v].add(center)
            else:
                s[center].add(v)
        return cls.of(s)

    @classmethod
    def from_encoding(cls, n: int, code: Sequence[int]) -> StrategyProfile:
        """Inverse of :meth:`encoding`: per pair 0 = absent, 1 = lower buys, 2 = higher buys."""
        s: list[set[int]] = [set() for _ in range(n)]
        for (u, v), c in zip(pair_list(n), code):
            if c == 1:
                s[u].add(v)
            elif c == 2:
                s[v].add(u)
            elif c != 0:
                raise ValidationError(f"bad pair code {c}")
        return cls.of(s)

    @property
    def n(self) -> int:
        return len(self.strategies)

    def __getitem__(self, u: int) -> frozenset[int]:
        return self.strategies[u]

    def __iter__(self):
        return iter(self.strategies)

    def replace(self, u: int, strategy: Iterable[int]) -> StrategyProfile:
        s = list(self.strategies)
        s[u] = frozenset(strategy)
        return StrategyProfile(tuple(s))

    def double_buys(self) -> list[tuple[int, int]]:
        return sorted(
            (u, v) for u, s in enumerate(self.strategies) for v in s if u < v and u in self.strategies[v]
        )

    def is_orientation(self) -> bool:
        return not self.double_buys()

    def canonical(self) -> StrategyProfile:
        """Drop the higher-indexed buyer's copy of every doubly bought link."""
        s = [set(x) for x in self.strategies]
        for u, v in self.double_buys():
            s[v].discard(u)
        return StrategyProfile.of(s)

    def encoding(self) -> tuple[int, ...]:
        if not self.is_orientation():
            raise ValidationError("only orientation profiles have a pair encoding")
        out = []
        for u, v in pair_list(self.n):
            if v in self.strategies[u]:
                out.append(1)
            elif u in self.strategies[v]:
                out.append(2)
            else:
                out.append(0)
        return tuple(out)

    def bought_mask(self, u: int) -> int:
        idx = pair_index(self.n)
        return sum(1 << idx[norm_edge(u, v)] for v in self.strategies[u])

    def others_mask(self, u: int) -> int:
        """Pair mask of links bought by players other than ``u``."""
        idx = pair_index(self.n)
        m = 0
        for x, s in enumerate(self.strategies):
            if x != u:
                for v in s:
                    m |= 1 << idx[norm_edge(x, v)]
        return m


@dataclass(frozen=True)
class CostBreakdown:
    link_cost: Fraction
    distance_penalty: Fraction

    @property
    def total(self) -> Fraction:
        return self.link_cost + self.distance_penalty


def _check_sizes(game: CelebrityGame, n: int, what: str) -> None:
    if n != game.n:
        raise ValidationError(f"{what} has {n} players but the game has {game.n}")


def outcome_graph(s: StrategyProfile) -> Graph:
    return Graph(s.n, frozenset(norm_edge(u, v) for u, sv in enumerate(s.strategies) for v in sv))


def penalty_from_distances(game: CelebrityGame, u: int, dist: Sequence) -> Fraction:
    return sum((game.weights[v] for v in range(game.n) if v != u and dist[v] > game.beta), Fraction(0))


def player_cost(game: CelebrityGame, s: StrategyProfile, u: int) -> CostBreakdown:
    _check_sizes(game, s.n, "profile")
    dist = bfs_distances(outcome_graph(s), u)
    return CostBreakdown(game.alpha * len(s[u]), penalty_from_distances(game, u, dist))


def weight_component(game: CelebrityGame, g: Graph) -> Fraction:
    """Sum of w_u + w_v over unordered pairs farther apart than beta."""
    _check_sizes(game, g.n, "graph")
    d = all_pairs_distances(g)
    w = game.weights
    total = Fraction(0)
    for u, v in pair_list(g.n):
        if d[u, v] > game.beta:
            total += w[u] + w[v]
    return total


def social_cost(game: CelebrityGame, g: Graph) -> Fraction:
    return game.alpha * len(g.edges) + weight_component(game, g)


def profile_social_cost(game: CelebrityGame, s: StrategyProfile) -> Fraction:
    """Sum of player costs; differs from ``social_cost`` only on double purchases."""
    return sum((player_cost(game, s, u).total for u in range(game.n)), Fraction(0))


def delta_cost(game: CelebrityGame, s: StrategyProfile, u: int, new_strategy: Iterable[int]) -> Fraction:
    new_strategy = frozenset(new_strategy)
    if u in new_strategy:
        raise ValidationError(f"player {u} cannot buy a link to itself")
    before = player_cost(game, s, u).total
    after = player_cost(game, s.replace(u, new_strategy), u).total
    return after - before


class Deviations:
    """Fast evaluator of player ``u``'s cost for arbitrary strategies.

    Built from the graph of links bought by the other players.  A shortest
    path from ``u`` never returns to ``u``, so the ball of radius beta around
    ``u`` after buying links to ``D`` is the ball around ``u`` in the others'
    graph united with the radius beta-1 balls around each member of ``D``.
    """

    def __init__(self, game: CelebrityGame, others_pair_mask: int, u: int):
        from .graph import adjacency_from_pair_mask

        self.game = game
        self.u = u
        adj = adjacency_from_pair_mask(game.n, others_pair_mask)
        self.base = ball_mask(adj, u, game.beta)
        self.balls = [ball_mask(adj, v, game.beta - 1) for v in range(game.n)]
        self.total = sum(game.scaled_weights)

    @classmethod
    def for_profile(cls, game: CelebrityGame, s: StrategyProfile, u: int) -> Deviations:
        return cls(game, s.others_mask(u), u)

    def scaled_cost(self, strategy: Iterable[int]) -> int:
        """Cost of ``strategy`` multiplied by ``game.scale``."""
        reach = self.base
        k = 0
        for v in strategy:
            reach |= self.balls[v]
            k += 1
        return self.game.scaled_alpha * k + self.total - self.game.mask_weight_scaled(reach)

    def cost(self, strategy: Iterable[int]) -> Fraction:
        return self.game.unscale(self.scaled_cost(strategy))


__all__ = [
    "CelebrityGame",
    "CostBreakdown",
    "Deviations",
    "Rational",
    "StrategyProfile",
    "UNREACHABLE",
    "as_rational",
    "delta_cost",
    "outcome_graph",
    "player_cost",
    "profile_social_cost",
    "social_cost",
    "weight_component",
]
