"""Social optimum, game classification, PoA/PoS and the structural-result checks.

:func:`verify_theorems` runs checks C1..C20 against an exhaustively
enumerated equilibrium set.  A check whose hypotheses do not hold for the
instance is reported as Vacuous rather than Pass.  Results proved under
beta > 1 are vacuous for beta = 1 games and vice versa.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotExhaustive
from .formats import fmt_q
from .equilibrium import EquilibriumSet
from .game import CelebrityGame, social_cost, weight_component
from .graph import (
    Graph,
    bridges,
    diameter,
    eccentricity,
    is_connected,
    is_star,
    is_tree,
    is_two_edge_connected,
    norm_edge,
    pair_list,
)


# ------------------------------------------------------------------ optimum


def opt_cost(game: CelebrityGame) -> Fraction:
    if game.beta > 1:
        return min(game.alpha, game.total_weight) * (game.n - 1)
    # beta = 1: every pair independently pays alpha (linked) or w_u + w_v (not)
    w = game.weights
    return sum((min(game.alpha, w[u] + w[v]) for u, v in pair_list(game.n)), Fraction(0))


def opt_graph(game: CelebrityGame) -> Graph:
    if game.beta > 1:
        return Graph.star(game.n, 0) if game.alpha < game.total_weight else Graph.empty(game.n)
    w = game.weights
    return Graph(game.n, frozenset(p for p in pair_list(game.n) if w[p[0]] + w[p[1]] > game.alpha))


def all_graphs(n: int):
    pairs = pair_list(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def brute_force_optima(game: CelebrityGame) -> tuple[Fraction, list[Graph]]:
    """Minimum social cost over every graph on n vertices, and all graphs attaining it."""
    best: Fraction | None = None
    winners: list[Graph] = []
    for g in all_graphs(game.n):
        c = social_cost(game, g)
        if best is None or c < best:
            best, winners = c, [g]
        elif c == best:
            winners.append(g)
    return best, winners


# ----------------------------------------------------------- classification


@dataclass(frozen=True)
class GameClass:
    is_star_celebrity: bool
    in_unique: bool
    celebrities: frozenset[int]
    high_weight_players: frozenset[int]


def classify(game: CelebrityGame) -> GameClass:
    a, W = game.alpha, game.total_weight
    celebs = frozenset(u for u, w in enumerate(game.weights) if a < w)
    high = frozenset(u for u, w in enumerate(game.weights) if a > W - w)
    in_unique = a >= game.w_max and len(high) >= 2
    return GameClass(not in_unique, in_unique, celebs, high)


# -------------------------------------------------------------------- prices


@dataclass(frozen=True)
class PriceReport:
    opt: Fraction
    worst_ne_cost: Fraction
    best_ne_cost: Fraction

    @property
    def poa(self) -> Fraction:
        return self.worst_ne_cost / self.opt

    @property
    def pos(self) -> Fraction:
        return self.best_ne_cost / self.opt


def _require_exhaustive(eq: EquilibriumSet) -> None:
    if not eq.exhaustive:
        raise NotExhaustive("prices and checks need an exhaustive equilibrium set")


def price_report(game: CelebrityGame, eq: EquilibriumSet) -> PriceReport:
    _require_exhaustive(eq)
    if not eq.graphs:
        raise ValueError("the equilibrium set is empty")
    costs = eq.costs
    return PriceReport(opt_cost(game), max(costs), min(costs))


# ------------------------------------------------------------- verification


class Status(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    VACUOUS = "Vacuous"


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    status: Status
    witness: str = ""


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[CheckRecord, ...]

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status is Status.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status(self, check_id: str) -> Status:
        for r in self.records:
            if r.check_id == check_id:
                return r.status
        raise KeyError(check_id)

    def __getitem__(self, check_id: str) -> CheckRecord:
        for r in self.records:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)


def edge_str(g: Graph) -> str:
    return ";".join(f"{u}-{v}" for u, v in g.sorted_edges())


def profile_str(profile) -> str:
    return " | ".join(f"{u}:" + ",".join(str(v) for v in sorted(s)) for u, s in enumerate(profile))


@dataclass
class _Ctx:
    game: CelebrityGame
    eq: EquilibriumSet
    cls: GameClass
    opt: Fraction
    connected: list = field(default_factory=list)


def _result(fails: list[str], applicable: bool) -> tuple[Status, str]:
    if fails:
        return Status.FAIL, fails[0]
    return (Status.PASS, "") if applicable else (Status.VACUOUS, "")


def _c1(ctx: _Ctx):
    if ctx.game.beta == 1 or not ctx.eq.graphs:
        return Status.VACUOUS, ""
    fails = [
        f"NE graph [{edge_str(ng.graph)}] is disconnected and not I_n"
        for ng in ctx.eq.graphs
        if ng.graph.edges and not is_connected(ng.graph)
    ]
    return _result(fails, True)


def _c2(ctx: _Ctx):
    if ctx.eq.profiles:
        return Status.PASS, ""
    return Status.FAIL, "no NE found by exhaustive enumeration"


def _c3(ctx: _Ctx):
    game = ctx.game
    has_empty = ctx.eq.has_graph(Graph.empty(game.n))
    expect = game.alpha >= game.w_max
    if has_empty != expect:
        return Status.FAIL, (
            f"I_n in NE = {has_empty} but alpha >= w_max is {expect} "
            f"(alpha={fmt_q(game.alpha)}, w_max={fmt_q(game.w_max)})"
        )
    return Status.PASS, ""


def _c4(ctx: _Ctx):
    if ctx.game.beta == 1:
        return Status.VACUOUS, ""
    unique_empty = [ng.graph for ng in ctx.eq.graphs] == [Graph.empty(ctx.game.n)]
    if unique_empty != ctx.cls.in_unique:
        return Status.FAIL, f"I_n unique NE graph = {unique_empty} but classify.in_unique = {ctx.cls.in_unique}"
    return Status.PASS, ""


def _c5(ctx: _Ctx):
    if ctx.game.beta == 1:
        return Status.VACUOUS, ""
    star = any(is_star(ng.graph) for ng in ctx.eq.graphs)
    conn = bool(ctx.connected)
    want = ctx.cls.is_star_celebrity
    if star != want or conn != want:
        return Status.FAIL, (
            f"star NE graph = {star}, connected NE graph = {conn}, "
            f"but classify.is_star_celebrity = {want}"
        )
    return Status.PASS, ""


def _c6(ctx: _Ctx):
    celebs = sorted(ctx.cls.celebrities)
    if not celebs or not ctx.connected:
        return Status.VACUOUS, ""
    fails = []
    for ng in ctx.connected:
        for u in celebs:
            e = eccentricity(ng.graph, u)
            if e > ctx.game.beta:
                fails.append(f"celebrity {u} has diam(u)={e} > beta={ctx.game.beta} in [{edge_str(ng.graph)}]")
    return _result(fails, True)


def _c7(ctx: _Ctx):
    if ctx.game.beta == 1 or not ctx.connected:
        return Status.VACUOUS, ""
    bound = 2 * ctx.game.beta + 1
    fails = [
        f"diam={diameter(ng.graph)} > 2*beta+1={bound} in [{edge_str(ng.graph)}]"
        for ng in ctx.connected
        if diameter(ng.graph) > bound
    ]
    return _result(fails, True)


def _c8(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.connected:
        return Status.VACUOUS, ""
    if game.alpha < game.w_min:
        bound, why = game.beta, "alpha < w_min"
    elif game.alpha < game.w_max:
        bound, why = 2 * game.beta, "w_min <= alpha < w_max"
    else:
        return Status.VACUOUS, ""
    fails = [
        f"{why} but diam={diameter(ng.graph)} > {bound} in [{edge_str(ng.graph)}]"
        for ng in ctx.connected
        if diameter(ng.graph) > bound
    ]
    return _result(fails, True)


def _c9(ctx: _Ctx):
    game = ctx.game
    trees = [ng for ng in ctx.eq.graphs if is_tree(ng.graph)]
    if game.beta == 1 or not trees:
        return Status.VACUOUS, ""
    fails = []
    for ng in trees:
        d = diameter(ng.graph)
        if d > game.beta + 1:
            fails.append(f"NE tree diam={d} > beta+1={game.beta + 1} in [{edge_str(ng.graph)}]")
        elif game.alpha > game.w_max and d > game.beta:
            fails.append(f"alpha > w_max but NE tree diam={d} > beta={game.beta} in [{edge_str(ng.graph)}]")
    return _result(fails, True)


def _c10(ctx: _Ctx):
    trees = [ng for ng in ctx.eq.graphs if is_tree(ng.graph)]
    if ctx.game.beta == 1 or not ctx.cls.is_star_celebrity or not trees:
        return Status.VACUOUS, ""
    fails = [
        f"NE tree cost {fmt_q(ng.social_cost)} > 2*opt={fmt_q(2 * ctx.opt)} in [{edge_str(ng.graph)}]"
        for ng in trees
        if ng.social_cost > 2 * ctx.opt
    ]
    return _result(fails, True)


def _c11(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.cls.is_star_celebrity:
        return Status.VACUOUS, ""
    applicable = False
    fails = []
    bound = game.alpha * (game.n - 1)
    for ng in ctx.eq.graphs:
        g = ng.graph
        if not any(eccentricity(g, v) <= game.beta - 1 for v in range(game.n)):
            continue
        applicable = True
        wc = weight_component(game, g)
        if wc > bound:
            fails.append(f"W(G,beta)={fmt_q(wc)} > alpha(n-1)={fmt_q(bound)} in [{edge_str(g)}]")
    return _result(fails, applicable)


def c12_bound(game: CelebrityGame) -> Fraction:
    n, a, b = game.n, game.alpha, game.beta
    return max(n * a, Fraction(9 * n * n, b) * a, Fraction(n * n, 2) * a)


def _c12(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.connected:
        return Status.VACUOUS, ""
    bound = c12_bound(game)
    fails = []
    for ng in ctx.connected:
        wc = weight_component(game, ng.graph)
        if wc > bound:
            fails.append(f"W(G,beta)={fmt_q(wc)} > {fmt_q(bound)} in [{edge_str(ng.graph)}]")
    return _result(fails, True)


def _heavy_players(ctx: _Ctx):
    """(profile, player) pairs buying more than 6n/beta links."""
    threshold = Fraction(6 * ctx.game.n, ctx.game.beta)
    for s in ctx.eq.profiles:
        for v in range(ctx.game.n):
            if len(s[v]) > threshold:
                yield s, v


def _c13(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.cls.is_star_celebrity:
        return Status.VACUOUS, ""
    from .game import outcome_graph

    need = Fraction(3 * game.n, game.beta)
    applicable = False
    fails = []
    for s, v in _heavy_players(ctx):
        applicable = True
        br = bridges(outcome_graph(s))
        count = sum(1 for x in s[v] if norm_edge(v, x) in br)
        if count < need:
            fails.append(f"player {v} buys {len(s[v])} links but only {count} bridges < 3n/beta in {profile_str(s)}")
    return _result(fails, applicable)


def _c14(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.cls.is_star_celebrity:
        return Status.VACUOUS, ""
    from .game import outcome_graph

    applicable = False
    fails = []
    for s, v in _heavy_players(ctx):
        applicable = True
        if is_two_edge_connected(outcome_graph(s)):
            fails.append(f"player {v} buys {len(s[v])} > 6n/beta links in a 2-edge-connected NE {profile_str(s)}")
    return _result(fails, applicable)


def _c15(ctx: _Ctx):
    game = ctx.game
    if game.beta != 1 or not ctx.eq.profiles:
        return Status.VACUOUS, ""
    a, w = game.alpha, game.weights
    fails = []
    for ng in ctx.eq.graphs:
        g = ng.graph
        for u, v in pair_list(game.n):
            present = g.has_edge(u, v)
            if (w[u] > a or w[v] > a) and not present:
                fails.append(f"edge {u}-{v} missing although a weight exceeds alpha in [{edge_str(g)}]")
            if w[u] < a and w[v] < a and present:
                fails.append(f"edge {u}-{v} present although both weights are below alpha in [{edge_str(g)}]")
    # a player with weight exactly alpha never pays for a link to a lighter one
    for s in ctx.eq.profiles:
        for u in range(game.n):
            if w[u] != a:
                continue
            for v in s[u]:
                if w[v] < a:
                    fails.append(f"player {u} (w=alpha) pays for {v} (w<alpha) in {profile_str(s)}")
    return _result(fails, True)


def _opt_edge_violations(game: CelebrityGame, g: Graph) -> list[str]:
    a, w = game.alpha, game.weights
    out = []
    for u, v in pair_list(game.n):
        s = w[u] + w[v]
        if s > a and not g.has_edge(u, v):
            out.append(f"optimum [{edge_str(g)}] lacks {u}-{v} with w_u+w_v > alpha")
        if s < a and g.has_edge(u, v):
            out.append(f"optimum [{edge_str(g)}] has {u}-{v} with w_u+w_v < alpha")
    return out


def _c16(ctx: _Ctx):
    game = ctx.game
    if game.beta != 1:
        return Status.VACUOUS, ""
    fails = []
    og = opt_graph(game)
    if social_cost(game, og) != ctx.opt:
        fails.append(f"opt_graph cost {fmt_q(social_cost(game, og))} != opt {fmt_q(ctx.opt)}")
    fails += _opt_edge_violations(game, og)
    best, winners = brute_force_optima(game)
    if best != ctx.opt:
        fails.append(f"brute-force optimum {fmt_q(best)} != opt {fmt_q(ctx.opt)}")
    for g in winners:
        fails += _opt_edge_violations(game, g)
    return _result(fails, True)


def _c17(ctx: _Ctx):
    if ctx.game.beta != 1 or not ctx.eq.graphs:
        return Status.VACUOUS, ""
    costs = ctx.eq.costs
    worst, best = max(costs), min(costs)
    fails = []
    if worst > 2 * ctx.opt:
        fails.append(f"PoA = {fmt_q(worst / ctx.opt)} > 2")
    if worst > 2 * best:
        fails.append(f"worst/best NE = {fmt_q(worst / best)} > 2")
    return _result(fails, True)


def _c18(ctx: _Ctx):
    if not ctx.eq.graphs:
        return Status.VACUOUS, ""
    bound = ctx.game.total_weight * (ctx.game.n - 1)
    worst = max(ctx.eq.costs)
    if worst > bound:
        return Status.FAIL, f"worst NE cost {fmt_q(worst)} > (n-1)W = {fmt_q(bound)}"
    return Status.PASS, ""


def _c19(ctx: _Ctx):
    if not ctx.eq.profiles:
        return Status.VACUOUS, ""
    fails = [f"doubly bought link {d} in {profile_str(s)}" for s in ctx.eq.profiles for d in s.double_buys()]
    return _result(fails, True)


def _c20(ctx: _Ctx):
    game = ctx.game
    if game.beta == 1 or not ctx.eq.graphs:
        return Status.VACUOUS, ""
    rep = PriceReport(ctx.opt, max(ctx.eq.costs), min(ctx.eq.costs))
    if ctx.cls.is_star_celebrity:
        if rep.pos != 1:
            return Status.FAIL, f"star celebrity game with PoS = {fmt_q(rep.pos)} != 1"
        return Status.PASS, ""
    expect = max(Fraction(1), game.total_weight / game.alpha)
    if rep.poa != expect or rep.pos != expect:
        return Status.FAIL, f"non-star game PoA={fmt_q(rep.poa)} PoS={fmt_q(rep.pos)} != max(1, W/alpha)={fmt_q(expect)}"
    return Status.PASS, ""


CHECKS = {
    "C1": _c1,
    "C2": _c2,
    "C3": _c3,
    "C4": _c4,
    "C5": _c5,
    "C6": _c6,
    "C7": _c7,
    "C8": _c8,
    "C9": _c9,
    "C10": _c10,
    "C11": _c11,
    "C12": _c12,
    "C13": _c13,
    "C14": _c14,
    "C15": _c15,
    "C16": _c16,
    "C17": _c17,
    "C18": _c18,
    "C19": _c19,
    "C20": _c20,
}

CHECK_DESCRIPTIONS = {
    "C1": "NE graphs are connected or I_n",
    "C2": "a NE exists",
    "C3": "I_n is a NE graph iff alpha >= w_max",
    "C4": "I_n is the unique NE graph iff classify.in_unique",
    "C5": "a star is a NE graph iff classify.is_star_celebrity",
    "C6": "celebrities have diam(u) <= beta in connected NE graphs",
    "C7": "connected NE graphs have diam <= 2beta+1",
    "C8": "diam <= beta if alpha < w_min; <= 2beta if w_min <= alpha < w_max",
    "C9": "NE trees have diam <= beta+1 (<= beta when alpha > w_max)",
    "C10": "NE trees cost at most 2 opt",
    "C11": "a vertex with diam(u) <= beta-1 forces W(G,beta) <= alpha(n-1)",
    "C12": "W(G,beta) <= max(n alpha, 9 n^2 alpha/beta, n^2 alpha/2)",
    "C13": "players buying > 6n/beta links own >= 3n/beta bridges",
    "C14": "2-edge-connected NE graphs have no player buying > 6n/beta links",
    "C15": "beta=1 NE edge rules",
    "C16": "beta=1 optimum edge rules",
    "C17": "beta=1 PoA <= 2 and worst/best NE <= 2",
    "C18": "worst NE cost <= (n-1)W",
    "C19": "no NE profile buys a link twice",
    "C20": "PoA = PoS = max(1, W/alpha) for non-star games; PoS = 1 for star games",
}


def verify_theorems(game: CelebrityGame, eq: EquilibriumSet) -> VerificationReport:
    _require_exhaustive(eq)
    ctx = _Ctx(game, eq, classify(game), opt_cost(game))
    ctx.connected = [ng for ng in eq.graphs if is_connected(ng.graph)]
    records = []
    for cid, fn in CHECKS.items():
        status, witness = fn(ctx)
        if status is Status.FAIL:
            witness = f"game(w=[{' '.join(fmt_q(w) for w in game.weights)}] alpha={fmt_q(game.alpha)} beta={game.beta}): {witness}"
        records.append(CheckRecord(cid, status, witness))
    return VerificationReport(tuple(records))


def normalized_poa(game: CelebrityGame, eq: EquilibriumSet) -> Fraction:
    """PoA * beta / n, the quantity the O(n/beta) conjecture says stays bounded."""
    return price_report(game, eq).poa * game.beta / game.n


def inject_fault(game: CelebrityGame, eq: EquilibriumSet) -> EquilibriumSet:
    """Harness self-test: add a profile that is not an equilibrium.

    Players 0 and 1 both pay for the link {0, 1} and nobody else buys
    anything, so the profile double-buys (C19) and, for n >= 3, its outcome
    graph is neither connected nor empty (C1).
    """
    from .equilibrium import NeGraph
    from .game import StrategyProfile, outcome_graph

    bad = StrategyProfile.of([{1}, {0}] + [set() for _ in range(game.n - 2)])
    g = outcome_graph(bad)
    graphs = tuple(ng for ng in eq.graphs if ng.graph != g) + (NeGraph(g, social_cost(game, g), 1),)
    return EquilibriumSet(game, eq.profiles + (bad,), graphs, eq.exhaustive)
