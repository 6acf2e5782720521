"""Command-line interface: ``celebgame <subcommand> ...``.

Exit codes: 0 on success, 1 when a check fails (``verify`` with a Fail
record, ``check-ne`` on a non-equilibrium), 2 on usage, parse or size errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import classify, inject_fault, opt_cost, price_report, verify_theorems
from .bestresponse import Method, best_response, build_reduction, min_dominating_set
from .equilibrium import Schedule, enumerate_ne, is_ne, run_dynamics
from .errors import CelebGameError
from .formats import (
    GenSpec,
    fmt_q,
    parse_edge_list,
    parse_instance,
    parse_profile,
    parse_rational,
    random_game,
    write_instance,
    write_profile,
)
from .game import StrategyProfile, outcome_graph, player_cost, social_cost


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_game(args):
    return parse_instance(_read(args.instance))


def _load_profile(args, n: int) -> StrategyProfile:
    return parse_profile(_read(args.profile), n)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _set(s) -> str:
    return " ".join(str(v) for v in sorted(s)) or "-"


def _edges(g) -> str:
    return ";".join(f"{u}-{v}" for u, v in g.sorted_edges())


def _edges_text(g) -> str:
    return _edges(g) or "-"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ------------------------------------------------------------- subcommands


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(
            n=args.n,
            beta=args.beta,
            alpha=parse_rational(args.alpha),
            weight_min=parse_rational(args.wmin),
            weight_max=parse_rational(args.wmax),
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(write_instance(random_game(spec)), args.output)
    return 0


def cmd_eval(args) -> int:
    game = _load_game(args)
    profile = _load_profile(args, game.n)
    g = outcome_graph(profile)
    players = [args.player] if args.player is not None else range(game.n)
    lines = [f"edges = {_edges_text(g)}", f"social_cost = {fmt_q(social_cost(game, g))}"]
    if not profile.is_orientation():
        total = sum((player_cost(game, profile, u).total for u in range(game.n)), Fraction(0))
        lines.append(f"profile_cost = {fmt_q(total)}")
    for u in players:
        _check_player(game, u)
        c = player_cost(game, profile, u)
        lines.append(
            f"player {u}: links = {_set(profile[u])} link_cost = {fmt_q(c.link_cost)} "
            f"penalty = {fmt_q(c.distance_penalty)} total = {fmt_q(c.total)}"
        )
    _emit("\n".join(lines) + "\n", None)
    return 0


def _check_player(game, u: int) -> None:
    if not 0 <= u < game.n:
        raise UsageError(f"player {u} is not in 0..{game.n - 1}")


def cmd_best_response(args) -> int:
    game = _load_game(args)
    profile = _load_profile(args, game.n)
    _check_player(game, args.player)
    br = best_response(game, profile, args.player, args.method)
    current = player_cost(game, profile, args.player).total
    _emit(
        f"player = {args.player}\n"
        f"method = {br.method.value}\n"
        f"strategy = {_set(br.strategy)}\n"
        f"cost = {fmt_q(br.cost)}\n"
        f"current_cost = {fmt_q(current)}\n",
        None,
    )
    return 0


def cmd_check_ne(args) -> int:
    game = _load_game(args)
    profile = _load_profile(args, game.n)
    cert = is_ne(game, profile)
    text = f"verdict = {cert.verdict.value}\n"
    if cert.witness is not None:
        w = cert.witness
        text += f"player = {w.player}\nstrategy = {_set(w.strategy)}\ndelta = {fmt_q(w.delta)}\n"
    _emit(text, None)
    return 0 if cert else 1


def cmd_enumerate(args) -> int:
    game = _load_game(args)
    eq = enumerate_ne(game, allow_n6=args.allow_n6, jobs=args.jobs)
    rows = [(i, _edges(ng.graph), fmt_q(ng.social_cost), ng.num_profiles) for i, ng in enumerate(eq.graphs)]
    _emit(_csv(["graph_id", "edge_list", "social_cost", "num_profiles"], rows), args.output)
    return 0


def cmd_poa(args) -> int:
    game = _load_game(args)
    eq = enumerate_ne(game, allow_n6=args.allow_n6, jobs=args.jobs)
    rep = price_report(game, eq)
    row = [fmt_q(rep.opt), fmt_q(rep.best_ne_cost), fmt_q(rep.worst_ne_cost), fmt_q(rep.pos), fmt_q(rep.poa)]
    _emit(_csv(["opt", "best_ne", "worst_ne", "pos", "poa"], [row]), args.output)
    return 0


def cmd_dynamics(args) -> int:
    game = _load_game(args)
    initial = _load_profile(args, game.n) if args.profile else StrategyProfile.empty(game.n)
    trace = run_dynamics(
        game,
        initial,
        schedule=args.schedule,
        max_rounds=args.max_rounds,
        responder=args.method,
        seed=args.seed,
    )
    lines = [f"schedule = {trace.schedule.value}", f"method = {Method(args.method).value}", "moves:"]
    for m in trace.moves:
        lines.append(f"  round {m.round} player {m.player}: {_set(m.old)} -> {_set(m.new)} delta = {fmt_q(m.delta)}")
    lines.append(f"outcome = {trace.outcome}")
    lines.append(f"rounds = {trace.rounds_run}")
    lines.append(f"edges = {_edges_text(outcome_graph(trace.final))}")
    lines.append(f"social_cost = {fmt_q(social_cost(game, outcome_graph(trace.final)))}")
    lines.append("final_profile:")
    lines += ["  " + row for row in write_profile(trace.final).splitlines()]
    _emit("\n".join(lines) + "\n", None)
    return 0


def cmd_classify(args) -> int:
    game = _load_game(args)
    c = classify(game)
    _emit(
        f"star_celebrity = {str(c.is_star_celebrity).lower()}\n"
        f"unique_empty_ne = {str(c.in_unique).lower()}\n"
        f"celebrities = {_set(c.celebrities)}\n"
        f"high_weight_players = {_set(c.high_weight_players)}\n"
        f"W = {fmt_q(game.total_weight)}\n"
        f"w_max = {fmt_q(game.w_max)}\n"
        f"w_min = {fmt_q(game.w_min)}\n"
        f"opt = {fmt_q(opt_cost(game))}\n",
        None,
    )
    return 0


def cmd_verify(args) -> int:
    game = _load_game(args)
    eq = enumerate_ne(game, allow_n6=args.allow_n6, jobs=args.jobs)
    if args.inject_fault:
        eq = inject_fault(game, eq)
    report = verify_theorems(game, eq)
    rows = [(r.check_id, r.status.value, r.witness) for r in report.records]
    _emit(_csv(["check_id", "status", "witness"], rows), args.output)
    return 0 if report.passed else 1


def cmd_reduce(args) -> int:
    source = parse_edge_list(_read(args.graph))
    red = build_reduction(source)
    br = best_response(red.game, red.profile, red.target_player, Method.EXACT)
    dom = min_dominating_set(source)
    agree = len(br.strategy) == len(dom) and br.cost == red.game.alpha * len(dom)
    text = (
        write_instance(red.game)
        + "profile:\n"
        + "".join("  " + row + "\n" for row in write_profile(red.profile).splitlines())
        + f"target = {red.target_player}\n"
        f"best_response = {_set(br.strategy)}\n"
        f"best_response_cost = {fmt_q(br.cost)}\n"
        f"min_dominating_set = {_set(dom)}\n"
        f"domination_number = {len(dom)}\n"
        f"agree = {str(agree).lower()}\n"
    )
    _emit(text, None)
    return 0 if agree else 1


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="celebgame", description="Exact analysis of celebrity games.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def instance(sp):
        sp.add_argument("--instance", required=True, help="instance file (key = value lines)")

    def profile(sp, required=True):
        sp.add_argument("--profile", required=required, help="profile file ('<u>: <v1> <v2> ...' lines)")

    def enum_opts(sp):
        sp.add_argument("--allow-n6", action="store_true", help="permit enumeration at n = 6")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
        sp.add_argument("-o", "--output", help="write CSV here instead of stdout")

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp.add_argument("--wmin", required=True)
    sp.add_argument("--wmax", required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("eval", help="player and social costs of a profile")
    instance(sp)
    profile(sp)
    sp.add_argument("--player", type=int)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("best-response", help="best response of one player")
    instance(sp)
    profile(sp)
    sp.add_argument("--player", type=int, required=True)
    sp.add_argument("--method", choices=[m.value for m in Method], default="exact")
    sp.set_defaults(func=cmd_best_response)

    sp = sub.add_parser("check-ne", help="is the profile a Nash equilibrium?")
    instance(sp)
    profile(sp)
    sp.set_defaults(func=cmd_check_ne)

    sp = sub.add_parser("enumerate", help="all NE graphs (CSV)")
    instance(sp)
    enum_opts(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("poa", help="price of anarchy and stability (CSV)")
    instance(sp)
    enum_opts(sp)
    sp.set_defaults(func=cmd_poa)

    sp = sub.add_parser("dynamics", help="best-response dynamics")
    instance(sp)
    profile(sp, required=False)
    sp.add_argument("--schedule", choices=[s.value for s in Schedule], default="roundrobin")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-rounds", type=int, default=100)
    sp.add_argument("--method", choices=[m.value for m in Method], default="exact")
    sp.set_defaults(func=cmd_dynamics)

    sp = sub.add_parser("classify", help="star-celebrity / unique-I_n classification")
    instance(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run checks C1..C20 (CSV)")
    instance(sp)
    enum_opts(sp)
    sp.add_argument("--inject-fault", action="store_true", help="self-test: add a non-equilibrium profile")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="dominating-set reduction on an edge-list graph")
    sp.add_argument("--graph", required=True, help="edge list: first line n, then 'u v' lines")
    sp.set_defaults(func=cmd_reduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, CelebGameError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
