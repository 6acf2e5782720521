"""Nash-equilibrium checks, exhaustive enumeration over orientations, and best-response dynamics."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bestresponse import (
    EXACT_LIMIT,
    Method,
    best_response,
    exact_minimum,
)
from .errors import InstanceTooLarge, WrongBeta
from .game import CelebrityGame, Deviations, StrategyProfile, social_cost
from .graph import Graph, adjacency_from_pair_mask, ball_mask, pair_list
from .rng import SplitMix64

ENUMERATE_LIMIT = 5
ENUMERATE_OVERRIDE_LIMIT = 6


class Verdict(str, enum.Enum):
    IS_NE = "IsNE"
    NOT_NE = "NotNE"


@dataclass(frozen=True)
class Deviation:
    player: int
    strategy: frozenset[int]
    delta: Fraction


@dataclass(frozen=True)
class NeCertificate:
    verdict: Verdict
    witness: Deviation | None = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.IS_NE


def _deviation_stages(current: frozenset[int], others: list[int]):
    """Candidate deviations in scan order: empty set, drops, adds, swaps."""
    yield "empty", [frozenset()]
    inside = sorted(current)
    outside = [v for v in others if v not in current]
    yield "drop", [current - {x} for x in inside]
    yield "add", [current | {y} for y in outside]
    yield "swap", [(current - {x}) | {y} for x in inside for y in outside]


def is_ne(game: CelebrityGame, s: StrategyProfile, limit: int = EXACT_LIMIT) -> NeCertificate:
    if game.n > limit:
        raise InstanceTooLarge(f"NE verification limited to n <= {limit}, got n = {game.n}")
    if s.n != game.n:
        raise ValueError(f"profile has {s.n} players but the game has {game.n}")
    devs = [Deviations.for_profile(game, s, u) for u in range(game.n)]
    current = [devs[u].cost(s[u]) for u in range(game.n)]
    stage_lists = [
        list(_deviation_stages(s[u], [v for v in range(game.n) if v != u])) for u in range(game.n)
    ]
    for stage in range(4):
        for u in range(game.n):
            for cand in stage_lists[u][stage][1]:
                delta = devs[u].cost(cand) - current[u]
                if delta < 0:
                    return NeCertificate(Verdict.NOT_NE, Deviation(u, cand, delta))
    for u in range(game.n):
        strategy, cost = exact_minimum(devs[u])
        if cost < current[u]:
            return NeCertificate(Verdict.NOT_NE, Deviation(u, strategy, cost - current[u]))
    return NeCertificate(Verdict.IS_NE)


@dataclass(frozen=True)
class NeGraph:
    graph: Graph
    social_cost: Fraction
    num_profiles: int


@dataclass(frozen=True)
class EquilibriumSet:
    game: CelebrityGame
    profiles: tuple[StrategyProfile, ...]
    graphs: tuple[NeGraph, ...]
    exhaustive: bool

    @property
    def costs(self) -> list[Fraction]:
        return [g.social_cost for g in self.graphs]

    def has_graph(self, g: Graph) -> bool:
        return any(ng.graph == g for ng in self.graphs)


class _BestCostCache:
    """Best attainable cost of player u given the pair mask of links others bought."""

    def __init__(self, game: CelebrityGame):
        self.game = game
        self._memo: dict[tuple[int, int], int] = {}

    def __call__(self, others_mask: int, u: int) -> int:
        """Scaled (integer) best-response cost."""
        key = (others_mask, u)
        c = self._memo.get(key)
        if c is None:
            c = exact_minimum(Deviations(self.game, others_mask, u))[1] * self.game.scale
            c = int(c)
            self._memo[key] = c
        return c


def _ne_orientations_of_graph(game: CelebrityGame, gmask: int, best_cost: _BestCostCache) -> list[tuple[int, ...]]:
    """Pair encodings of all NE orientations of the graph with pair mask ``gmask``."""
    n = game.n
    pairs = pair_list(n)
    adj = adjacency_from_pair_mask(n, gmask)
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        if gmask >> i & 1:
            incident[a].append(i)
            incident[b].append(i)
    # edges (a, b) with b = u must be settled once vertex u has been decided
    due: list[int] = [0] * n
    for i, (a, b) in enumerate(pairs):
        if gmask >> i & 1:
            due[b] |= 1 << i

    total = sum(game.scaled_weights)
    alpha = game.scaled_alpha
    feasible: list[list[int]] = []
    for u in range(n):
        penalty = total - game.mask_weight_scaled(ball_mask(adj, u, game.beta))
        inc = incident[u]
        options = []
        for sub in range(1 << len(inc)):
            bought = 0
            k = 0
            for j, i in enumerate(inc):
                if sub >> j & 1:
                    bought |= 1 << i
                    k += 1
            cost = alpha * k + penalty
            if cost == best_cost(gmask & ~bought, u):
                options.append(bought)
        if not options:
            return []
        feasible.append(options)

    found: list[tuple[int, ...]] = []
    choice = [0] * n

    def assign(u: int, taken: int) -> None:
        if u == n:
            code = [0] * len(pairs)
            for x in range(n):
                m = choice[x]
                while m:
                    low = m & -m
                    i = low.bit_length() - 1
                    code[i] = 1 if pairs[i][0] == x else 2
                    m ^= low
            found.append(tuple(code))
            return
        for bought in feasible[u]:
            if bought & taken:
                continue
            now = taken | bought
            if now & due[u] != due[u]:
                continue
            choice[u] = bought
            assign(u + 1, now)

    assign(0, 0)
    return found


def _enumerate_chunk(game: CelebrityGame, masks: Sequence[int]) -> list[tuple[int, int, list[tuple[int, ...]]]]:
    cache = _BestCostCache(game)
    out = []
    for gmask in masks:
        codes = _ne_orientations_of_graph(game, gmask, cache)
        if codes:
            out.append((gmask, len(codes), codes))
    return out


def enumerate_ne(game: CelebrityGame, allow_n6: bool = False, jobs: int = 1) -> EquilibriumSet:
    """All NE orientation profiles of ``game``.

    The search space is every assignment of {absent, lower buys, higher buys}
    to each unordered pair.  It is walked graph by graph: for a fixed outcome
    graph each player's admissible purchase sets are exactly those whose cost
    matches the player's exact best-response cost, and orientations are
    assembled from those sets by backtracking.
    """
    limit = ENUMERATE_OVERRIDE_LIMIT if allow_n6 else ENUMERATE_LIMIT
    if game.n > limit:
        hint = "" if allow_n6 or game.n > ENUMERATE_OVERRIDE_LIMIT else " (use the n = 6 override)"
        raise InstanceTooLarge(f"NE enumeration limited to n <= {limit}, got n = {game.n}{hint}")
    n = game.n
    num_pairs = n * (n - 1) // 2
    masks = range(1 << num_pairs)
    if jobs > 1:
        chunks = [masks[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_enumerate_chunk, [game] * jobs, chunks))
        results = sorted((r for part in parts for r in part), key=lambda r: r[0])
    else:
        results = _enumerate_chunk(game, masks)

    codes = sorted(code for _, _, cs in results for code in cs)
    profiles = tuple(StrategyProfile.from_encoding(n, c) for c in codes)
    graphs = []
    for gmask, count, _ in results:
        g = Graph.from_pair_mask(n, gmask)
        graphs.append(NeGraph(g, social_cost(game, g), count))
    return EquilibriumSet(game, profiles, tuple(graphs), exhaustive=True)


# ---------------------------------------------------------------- dynamics


class Schedule(str, enum.Enum):
    ROUND_ROBIN = "roundrobin"
    RANDOM = "random"


@dataclass(frozen=True)
class Move:
    round: int
    player: int
    old: frozenset[int]
    new: frozenset[int]
    delta: Fraction


@dataclass(frozen=True)
class DynamicsTrace:
    schedule: Schedule
    moves: tuple[Move, ...]
    converged: bool
    final: StrategyProfile
    rounds_run: int

    @property
    def outcome(self) -> str:
        return "Converged" if self.converged else "MaxRoundsReached"


def run_dynamics(
    game: CelebrityGame,
    initial: StrategyProfile | None = None,
    schedule: Schedule | str = Schedule.ROUND_ROBIN,
    max_rounds: int = 100,
    responder: Method | str = Method.EXACT,
    seed: int = 0,
    order: Sequence[int] | None = None,
) -> DynamicsTrace:
    """Sequential best-response dynamics.

    Each round activates every player once (in ``order`` for round robin, in a
    fresh seeded permutation otherwise).  A player switches only when its
    responder finds a strictly cheaper strategy.  A round without switches
    ends the run as converged.
    """
    schedule = Schedule(schedule)
    responder = Method(responder)
    if responder is Method.BETA1 and game.beta != 1:
        raise WrongBeta(f"the beta1 responder needs beta = 1, got {game.beta}")
    if responder is Method.EXACT and game.n > EXACT_LIMIT:
        raise InstanceTooLarge(f"exact responder limited to n <= {EXACT_LIMIT}, got n = {game.n}")
    profile = initial if initial is not None else StrategyProfile.empty(game.n)
    base_order = list(order) if order is not None else list(range(game.n))
    if sorted(base_order) != list(range(game.n)):
        raise ValueError("order must be a permutation of the players")
    rng = SplitMix64(seed)
    moves: list[Move] = []
    for rnd in range(max_rounds):
        if schedule is Schedule.RANDOM:
            players = rng.permutation(game.n)
        else:
            players = base_order
        changed = False
        for u in players:
            current = Deviations.for_profile(game, profile, u).cost(profile[u])
            br = best_response(game, profile, u, responder)
            if br.cost < current:
                moves.append(Move(rnd, u, profile[u], br.strategy, br.cost - current))
                profile = profile.replace(u, br.strategy)
                changed = True
        if not changed:
            return DynamicsTrace(schedule, tuple(moves), True, profile, rnd + 1)
    return DynamicsTrace(schedule, tuple(moves), False, profile, max_rounds)
