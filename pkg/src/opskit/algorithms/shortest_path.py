"""Single-pair shortest paths (Dijkstra) on nonnegative undirected graphs."""

from __future__ import annotations

import heapq

from ..errors import Unreachable
from ..graph import INFINITY, WeightedGraph


def shortest_path(g: WeightedGraph, s: int, t: int) -> tuple[list[int], float]:
    """Return ``(path, distance)`` from ``s`` to ``t``.

    Among equally short routes the predecessor with the lowest vertex id is
    kept, so the reconstructed path is deterministic.
    """
    for x in (s, t):
        if not 1 <= x <= g.n:
            raise ValueError(f"vertex {x} outside 1..{g.n}")
    if s == t:
        return [s], 0.0

    dist = [INFINITY] * (g.n + 1)
    pred = [0] * (g.n + 1)
    done = [False] * (g.n + 1)
    dist[s] = 0.0
    heap = [(0.0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == t:
            break
        for v, w in g.neighbors(u):
            if done[v]:
                continue
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and u < pred[v]:
                pred[v] = u

    if dist[t] == INFINITY:
        raise Unreachable(f"no path from {s} to {t}")
    path = [t]
    while path[-1] != s:
        path.append(pred[path[-1]])
    path.reverse()
    return path, dist[t]
