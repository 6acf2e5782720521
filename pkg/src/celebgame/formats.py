"""Text formats for instances, profiles and edge lists, plus seeded instance generation."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ValidationError
from .game import CelebrityGame, StrategyProfile, as_rational
from .graph import Graph
from .rng import SplitMix64

_INT = re.compile(r"[+-]?\d+\Z")
_FRAC = re.compile(r"([+-]?\d+)/(\d+)\Z")
_DEC = re.compile(r"[+-]?(\d+)?\.(\d+)\Z|[+-]?\d+\.\Z")

INSTANCE_KEYS = ("n", "alpha", "beta", "weights")


def fmt_q(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str) -> Fraction:
    """Exact value of ``p/q``, an integer, or a decimal with at most 9 fractional digits."""
    t = token.strip()
    if _INT.match(t):
        return Fraction(int(t))
    m = _FRAC.match(t)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return Fraction(int(m.group(1)), den)
    if _DEC.match(t):
        digits = t.split(".", 1)[1]
        if len(digits) > 9:
            raise ValueError(f"decimal {token!r} has more than 9 fractional digits")
        return Fraction(t)
    raise ValueError(f"not a rational number: {token!r}")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_instance(text: str) -> CelebrityGame:
    values: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in INSTANCE_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno)
        values[key] = (lineno, value)
    for key in INSTANCE_KEYS:
        if key not in values:
            raise ParseError(f"missing key {key!r}")

    def field(key, conv):
        lineno, value = values[key]
        try:
            return conv(value)
        except ValueError as exc:
            raise ParseError(f"bad value for {key}: {exc}", lineno) from None

    def as_int(v: str) -> int:
        if not _INT.match(v.strip()):
            raise ValueError(f"expected an integer, got {v!r}")
        return int(v)

    n = field("n", as_int)
    alpha = field("alpha", parse_rational)
    beta = field("beta", as_int)
    weights = field("weights", lambda v: [parse_rational(t) for t in v.split()])
    if len(weights) != n:
        raise ValidationError(f"weights has {len(weights)} entries but n = {n}")
    if n < 2:
        raise ValidationError(f"n must be >= 2, got {n}")
    if not 1 <= beta <= n - 1:
        raise ValidationError(f"beta must satisfy 1 <= beta <= n-1 = {n - 1}, got {beta}")
    return CelebrityGame(tuple(weights), alpha, beta)


def write_instance(game: CelebrityGame) -> str:
    return (
        f"n = {game.n}\n"
        f"alpha = {fmt_q(game.alpha)}\n"
        f"beta = {game.beta}\n"
        f"weights = {' '.join(fmt_q(w) for w in game.weights)}\n"
    )


def parse_profile(text: str, n: int | None = None) -> StrategyProfile:
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"expected '<u>: <v1> <v2> ...', got {raw.strip()!r}", lineno)
        try:
            u = int(head)
            targets = [int(t) for t in tail.split()]
        except ValueError:
            raise ParseError(f"player ids must be integers in {raw.strip()!r}", lineno) from None
        if u in rows:
            raise ParseError(f"player {u} listed twice", lineno)
        if len(set(targets)) != len(targets):
            raise ParseError(f"player {u} lists a target twice", lineno)
        rows[u] = targets
    size = len(rows) if n is None else n
    if sorted(rows) != list(range(size)):
        raise ValidationError(f"players 0..{size - 1} must each appear exactly once, got {sorted(rows)}")
    return StrategyProfile.of([rows[u] for u in range(size)])


def write_profile(profile: StrategyProfile) -> str:
    lines = []
    for u, s in enumerate(profile):
        targets = " ".join(str(v) for v in sorted(s))
        lines.append(f"{u}: {targets}".rstrip())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [(i, _strip(raw)) for i, raw in enumerate(text.splitlines(), start=1)]
    lines = [(i, l) for i, l in lines if l]
    if not lines:
        raise ParseError("empty graph file")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {first!r}", lineno) from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"vertex ids must be integers in {line!r}", lineno) from None
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    return f"{g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


# --------------------------------------------------------------- generation

GRID = 100


@dataclass(frozen=True)
class GenSpec:
    n: int
    beta: int
    alpha: Fraction
    weight_min: Fraction
    weight_max: Fraction
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "weight_min", as_rational(self.weight_min))
        object.__setattr__(self, "weight_max", as_rational(self.weight_max))
        if self.weight_min > self.weight_max:
            raise ValidationError("weight_min must be <= weight_max")
        if self.weight_min <= 0:
            raise ValidationError("weights must be positive: weight_min must be > 0")
        if self.n < 2 or not 1 <= self.beta <= self.n - 1:
            raise ValidationError(f"need n >= 2 and 1 <= beta <= n-1, got n={self.n}, beta={self.beta}")


def random_game(spec: GenSpec) -> CelebrityGame:
    """Weights uniform on the multiples of 1/100 inside [weight_min, weight_max]."""
    lo = math.ceil(spec.weight_min * GRID)
    hi = math.floor(spec.weight_max * GRID)
    if lo > hi:
        raise ValidationError(
            f"no multiple of 1/{GRID} lies in [{fmt_q(spec.weight_min)}, {fmt_q(spec.weight_max)}]"
        )
    rng = SplitMix64(spec.seed)
    weights = tuple(Fraction(rng.randint(lo, hi), GRID) for _ in range(spec.n))
    return CelebrityGame(weights, spec.alpha, spec.beta)
