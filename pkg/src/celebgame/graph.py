"""Undirected simple graphs on vertices ``0..n-1`` and their metric primitives.

Distances are hop counts.  Pairs in different components are at distance
:data:`UNREACHABLE`, a sentinel that compares greater than every integer so
that threshold tests such as ``d > beta`` behave as if the distance were
infinite.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ValidationError

Edge = tuple[int, int]


@functools.total_ordering
class _Unreachable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        # nothing is larger than the sentinel
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("celebgame.UNREACHABLE")

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def pair_list(n: int) -> list[Edge]:
    """Unordered pairs in the fixed order (0,1), (0,2), ..., (n-2,n-1)."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@functools.lru_cache(maxsize=None)
def pair_index(n: int) -> dict[Edge, int]:
    return {p: i for i, p in enumerate(pair_list(n))}


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be >= 0, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normalized.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, frozenset())

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(pair_list(n)))

    @classmethod
    def star(cls, n: int, center: int = 0) -> Graph:
        return cls(n, frozenset(norm_edge(center, v) for v in range(n) if v != center))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValidationError("a cycle needs at least 3 vertices")
        return cls(n, frozenset(norm_edge(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def from_pair_mask(cls, n: int, mask: int) -> Graph:
        return cls(n, frozenset(p for i, p in enumerate(pair_list(n)) if mask >> i & 1))

    # views

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nb) for nb in self.neighbors)

    @cached_property
    def pair_mask(self) -> int:
        idx = pair_index(self.n)
        return sum(1 << idx[e] for e in self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def without_edge(self, e: Edge) -> Graph:
        return Graph(self.n, self.edges - {norm_edge(*e)})

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        return Graph(self.n, self.edges | {norm_edge(*e) for e in extra})

    def __len__(self) -> int:
        return len(self.edges)


class DistanceMatrix:
    """Symmetric table of hop distances; disconnected pairs hold UNREACHABLE."""

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(r) for r in rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, key):
        u, v = key
        return self._rows[u][v]

    def row(self, u: int) -> tuple:
        return self._rows[u]

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self):
        return f"DistanceMatrix({[list(r) for r in self._rows]!r})"


def bfs_distances(g: Graph, source: int) -> list:
    dist: list = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    nbrs = g.neighbors
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if dist[y] is UNREACHABLE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(bfs_distances(g, s) for s in range(g.n))


def eccentricity(g: Graph, u: int):
    """Largest distance from ``u`` (UNREACHABLE if some vertex cannot be reached)."""
    return max(bfs_distances(g, u), default=0)


def diameter(g: Graph):
    if g.n == 0:
        return 0
    return max(eccentricity(g, u) for u in range(g.n))


def components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and len(g.edges) == g.n - 1 and is_connected(g)


def is_star(g: Graph) -> bool:
    """True for a star S_n: n-1 edges all sharing one center (n=2 is a single edge)."""
    if g.n < 2 or len(g.edges) != g.n - 1:
        return False
    return any(g.degree(c) == g.n - 1 for c in range(g.n))


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose removal disconnects their endpoints (iterative low-link DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    timer = 0
    nbrs = [sorted(nb) for nb in g.neighbors]
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next neighbor position)
        stack = [(root, -1, 0)]
        while stack:
            x, parent, i = stack[-1]
            if i < len(nbrs[x]):
                stack[-1] = (x, parent, i + 1)
                y = nbrs[x][i]
                if y == parent:
                    # simple graph: at most one edge back to the parent
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, x, 0))
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        found.add(norm_edge(parent, x))
    return frozenset(found)


def is_two_edge_connected(g: Graph) -> bool:
    return g.n >= 2 and is_connected(g) and not bridges(g)


def ball_mask(adj: tuple[int, ...] | list[int], source: int, radius: int) -> int:
    """Bitmask of vertices within ``radius`` hops of ``source``."""
    reach = 1 << source
    frontier = reach
    for _ in range(radius):
        nxt = 0
        f = frontier
        while f:
            low_bit = f & -f
            nxt |= adj[low_bit.bit_length() - 1]
            f ^= low_bit
        frontier = nxt & ~reach
        if not frontier:
            break
        reach |= frontier
    return reach


def adjacency_from_pair_mask(n: int, mask: int) -> list[int]:
    adj = [0] * n
    for i, (u, v) in enumerate(pair_list(n)):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj
