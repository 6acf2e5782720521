"""Seeded random instance families used by the test corpus and the acceptance harness.

Weights and alpha are drawn from coarse grids on purpose: the interesting
boundaries (alpha = w_u, alpha = W - w_u, alpha = W) are only hit with
positive probability when values collide exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .game import CelebrityGame
from .graph import Graph, is_connected, pair_list
from .rng import SplitMix64


def _weight(rng: SplitMix64) -> Fraction:
    if rng.chance(1, 2):
        return Fraction(rng.randint(1, 4))
    return Fraction(rng.randint(1, 16), 4)


def _alpha(rng: SplitMix64, weights: Sequence[Fraction]) -> Fraction:
    W = sum(weights, Fraction(0))
    pick = rng.below(4)
    if pick == 0:
        return rng.choice(list(weights))
    if pick == 1:
        return W - rng.choice(list(weights))
    if pick == 2:
        return rng.choice([W, W / 2, W + 1, min(weights) / 2])
    return Fraction(rng.randint(1, int(4 * (W + 1))), 4)


def random_instance(rng: SplitMix64, n: int, beta: int) -> CelebrityGame:
    weights = tuple(_weight(rng) for _ in range(n))
    return CelebrityGame(weights, _alpha(rng, weights), beta)


def game_corpus(seed: int, count: int, sizes: Sequence[int], beta_mode: str = "ge2") -> Iterator[CelebrityGame]:
    """``count`` games with n drawn from ``sizes``.

    ``beta_mode``: "ge2" draws beta from 2..n-1, "one" fixes beta = 1, "any" uses 1..n-1.
    """
    rng = SplitMix64(seed)
    for _ in range(count):
        n = rng.choice(list(sizes))
        if beta_mode == "one":
            beta = 1
        elif beta_mode == "ge2":
            beta = rng.randint(2, n - 1)
        elif beta_mode == "any":
            beta = rng.randint(1, n - 1)
        else:
            raise ValueError(f"unknown beta_mode {beta_mode!r}")
        yield random_instance(rng, n, beta)


def random_graph(rng: SplitMix64, n: int, p_num: int = 1, p_den: int = 2) -> Graph:
    return Graph(n, frozenset(e for e in pair_list(n) if rng.chance(p_num, p_den)))


def random_connected_graph(rng: SplitMix64, n: int) -> Graph:
    """Random spanning tree plus random extra edges; always connected."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.below(v), v))
    for e in pair_list(n):
        if rng.chance(1, 3):
            edges.add(e)
    g = Graph.from_edges(n, edges)
    assert is_connected(g)
    return g
