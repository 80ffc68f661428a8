"""Weighted undirected graphs and their infinity-sentinel weight matrices.

Vertex ids are 1-based everywhere in the public API. ``INFINITY`` marks the
absence of an edge in a weight matrix, and the diagonal is always
``INFINITY`` (a self-distance is never written).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import AsymmetricMatrix, BadVertexId, DuplicateEdge, FiniteDiagonal, ParseError

INFINITY = math.inf


@dataclass(frozen=True, order=True)
class Edge:
    """An undirected edge, stored with ``u < v``."""

    u: int
    v: int
    weight: float = field(compare=False)

    def __post_init__(self):
        if self.u == self.v:
            raise ParseError(f"self-loop on vertex {self.u}")
        if not math.isfinite(self.weight) or self.weight < 0:
            raise ValueError(f"edge weight must be finite and >= 0, got {self.weight}")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)
        object.__setattr__(self, "weight", float(self.weight))

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class WeightedGraph:
    """Immutable undirected graph on vertices ``1..n``.

    Parallel edges are rejected with :class:`DuplicateEdge`.
    """

    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge | tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self.n = n
        table: dict[tuple[int, int], Edge] = {}
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            for x in (e.u, e.v):
                if not 1 <= x <= n:
                    raise BadVertexId(f"vertex {x} outside 1..{n}")
            if e.key in table:
                raise DuplicateEdge(f"duplicate edge {e.u}-{e.v}")
            table[e.key] = e
        self._edges = tuple(sorted(table.values()))
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n + 1)]
        for e in self._edges:
            adj[e.u].append((e.v, e.weight))
            adj[e.v].append((e.u, e.weight))
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges sorted by ``(u, v)``."""
        return self._edges

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, x: int) -> tuple[tuple[int, float], ...]:
        """``(neighbor, weight)`` pairs in ascending neighbor order."""
        return self._adj[x]

    def weight(self, u: int, v: int) -> float:
        for y, w in self._adj[u]:
            if y == v:
                return w
        return INFINITY

    def total_weight(self) -> float:
        return sum(e.weight for e in self._edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for y, _ in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and [(e.u, e.v, e.weight) for e in self._edges] == [
            (e.u, e.v, e.weight) for e in other._edges
        ]

    def __hash__(self) -> int:
        return hash((self.n, tuple((e.u, e.v, e.weight) for e in self._edges)))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={len(self._edges)})"


@dataclass(frozen=True)
class WeightMatrix:
    """Symmetric ``n x n`` matrix of extended weights.

    Storage is 0-based; indexing with ``c[i, j]`` is 1-based to match vertex
    labels.
    """

    n: int
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"weight matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.rows[i][i] != INFINITY:
                raise FiniteDiagonal(f"diagonal cell ({i + 1},{i + 1}) is {self.rows[i][i]}, expected inf")
            for j in range(i + 1, self.n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise AsymmetricMatrix(
                        f"c[{i + 1}][{j + 1}]={self.rows[i][j]} but c[{j + 1}][{i + 1}]={self.rows[j][i]}"
                    )

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[float, ...]:
        return self.rows[i - 1]


def weight_matrix_from_graph(g: WeightedGraph) -> WeightMatrix:
    c = [[INFINITY] * g.n for _ in range(g.n)]
    for e in g.edges:
        c[e.u - 1][e.v - 1] = e.weight
        c[e.v - 1][e.u - 1] = e.weight
    return WeightMatrix(g.n, tuple(tuple(r) for r in c))


def graph_from_weight_matrix(c: WeightMatrix | list[list[float]]) -> WeightedGraph:
    """Inverse of :func:`weight_matrix_from_graph`.

    A plain nested list is validated on the way in, so asymmetric input
    raises :class:`AsymmetricMatrix` and a finite diagonal raises
    :class:`FiniteDiagonal`.
    """
    if not isinstance(c, WeightMatrix):
        c = WeightMatrix(len(c), tuple(tuple(float(x) for x in r) for r in c))
    edges = []
    for i in range(c.n):
        for j in range(i + 1, c.n):
            w = c.rows[i][j]
            if w != INFINITY:
                edges.append(Edge(i + 1, j + 1, w))
    return WeightedGraph(c.n, edges)


def format_weight(w: float) -> str:
    """Render a weight; integral values print without a decimal point."""
    if w == INFINITY:
        return "inf"
    if float(w).is_integer():
        return str(int(w))
    return repr(float(w))


def parse_weight(token: str) -> float:
    if token == "inf":
        return INFINITY
    return float(token)
