"""Maximum flow by Edmonds-Karp, with the minimum cut as certificate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ..graph import WeightedGraph


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    capacity: float

    def __post_init__(self):
        if self.capacity < 0:
            raise ValueError(f"negative capacity on arc {self.tail}->{self.head}")
        if self.tail == self.head:
            raise ValueError(f"self-loop arc on vertex {self.tail}")


class FlowNetwork:
    """Directed capacity network on vertices ``1..n``.

    Parallel arcs are allowed and behave as one arc with the summed capacity.
    """

    def __init__(self, n: int, arcs: Iterable[Arc | tuple[int, int, float]] = ()):
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(a if isinstance(a, Arc) else Arc(*a) for a in arcs)
        for a in self.arcs:
            for x in (a.tail, a.head):
                if not 1 <= x <= n:
                    raise ValueError(f"vertex {x} outside 1..{n}")

    @classmethod
    def from_undirected(cls, g: WeightedGraph) -> FlowNetwork:
        """Each edge becomes a pair of opposite arcs with the edge weight as capacity."""
        arcs = []
        for e in g.edges:
            arcs.append(Arc(e.u, e.v, e.weight))
            arcs.append(Arc(e.v, e.u, e.weight))
        return cls(g.n, arcs)

    def capacity_matrix(self) -> list[list[float]]:
        cap = [[0.0] * (self.n + 1) for _ in range(self.n + 1)]
        for a in self.arcs:
            cap[a.tail][a.head] += a.capacity
        return cap

    def cut_capacity(self, source_side: set[int]) -> float:
        """Total capacity of arcs leaving ``source_side``."""
        return sum(a.capacity for a in self.arcs if a.tail in source_side and a.head not in source_side)


class MaxFlow(NamedTuple):
    value: float
    cut: frozenset[int]


def max_flow(net: FlowNetwork, s: int, t: int) -> MaxFlow:
    """Edmonds-Karp (shortest augmenting paths by BFS).

    ``cut`` is the source side of a minimum cut: the vertices still
    reachable from ``s`` in the final residual network. Its capacity equals
    ``value``.
    """
    if s == t:
        raise ValueError("source and sink must differ")
    n = net.n
    residual = net.capacity_matrix()
    value = 0.0
    while True:
        parent = [0] * (n + 1)
        parent[s] = s
        queue = deque([s])
        while queue and not parent[t]:
            u = queue.popleft()
            for v in range(1, n + 1):
                if not parent[v] and residual[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if not parent[t]:
            break
        bottleneck = float("inf")
        v = t
        while v != s:
            u = parent[v]
            bottleneck = min(bottleneck, residual[u][v])
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] += bottleneck
            v = u
        value += bottleneck

    return MaxFlow(value, frozenset(v for v in range(1, n + 1) if parent[v]))
