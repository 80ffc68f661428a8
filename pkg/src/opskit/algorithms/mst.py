"""Minimum spanning trees: Prim (label-array form), Kruskal, brute force."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DisconnectedGraph, TooLarge
from ..graph import INFINITY, Edge, WeightedGraph, weight_matrix_from_graph

BRUTE_FORCE_MAX_VERTICES = 10


@dataclass(frozen=True)
class MstResult:
    """Tree edges in production order.

    ``pairs`` keeps the orientation the algorithm produced them in (Prim
    emits ``(tree vertex, new vertex)``); ``edges`` are normalized.
    """

    edges: tuple[Edge, ...]
    total_weight: float
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not self.pairs:
            object.__setattr__(self, "pairs", tuple(e.key for e in self.edges))


@dataclass
class PrimState:
    """Working arrays of the label-based Prim procedure.

    ``tree`` holds ``(near[v], v)`` pairs in discovery order, so its pairs
    are oriented (tree vertex first) rather than normalized.
    """

    start: int
    remaining: set[int]
    near: dict[int, int]
    d: dict[int, float]
    tree: list[tuple[int, int]] = field(default_factory=list)


def prim_init(g: WeightedGraph, start: int = 1) -> PrimState:
    if not 1 <= start <= g.n:
        raise ValueError(f"start vertex {start} outside 1..{g.n}")
    c = weight_matrix_from_graph(g)
    remaining = set(g.vertices) - {start}
    near = {v: start for v in g.vertices}
    d = {v: c[v, start] for v in g.vertices}
    return PrimState(start, remaining, near, d)


def prim_step(state: PrimState, g: WeightedGraph) -> int:
    """Add one vertex to the tree and return it.

    Selection scans vertices in ascending order with strict ``<``, so the
    lowest-index vertex wins a tie. Label updates use strict ``>``, so an
    earlier ``near`` assignment survives an equal-weight alternative.
    """
    dmin = INFINITY
    v = None
    for j in g.vertices:
        if state.d[j] < dmin and j in state.remaining:
            v, dmin = j, state.d[j]
    if v is None:
        raise DisconnectedGraph(
            f"vertices {sorted(state.remaining)} are unreachable from vertex {state.start}"
        )
    state.tree.append((state.near[v], v))
    state.remaining.discard(v)
    for u, w in g.neighbors(v):
        if state.d[u] > w and u in state.remaining:
            state.near[u] = v
            state.d[u] = w
    return v


def prim_mst(g: WeightedGraph, start: int = 1) -> MstResult:
    """Prim's algorithm with ``near``/``d`` label arrays.

    Runs ``n - 1`` selection rounds from ``start``; the returned edge order
    is the discovery order. Raises :class:`DisconnectedGraph` as soon as a
    round finds no finite label.
    """
    state = prim_init(g, start)
    for _ in range(g.n - 1):
        prim_step(state, g)
    edges = tuple(Edge(a, b, g.weight(a, b)) for a, b in state.tree)
    return MstResult(edges, sum(e.weight for e in edges), tuple(state.tree))


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def kruskal_mst(g: WeightedGraph) -> MstResult:
    ds = _DisjointSet(g.n)
    chosen = []
    for e in sorted(g.edges, key=lambda e: (e.weight, e.u, e.v)):
        if ds.union(e.u, e.v):
            chosen.append(e)
            if len(chosen) == g.n - 1:
                break
    if len(chosen) != max(g.n - 1, 0):
        raise DisconnectedGraph(f"graph on {g.n} vertices has no spanning tree")
    return MstResult(tuple(chosen), sum(e.weight for e in chosen))


def is_spanning_tree(n: int, edges) -> bool:
    """True when ``edges`` (objects with ``u``/``v``) form a spanning tree on ``1..n``."""
    edges = list(edges)
    if len(edges) != max(n - 1, 0):
        return False
    ds = _DisjointSet(n)
    return all(ds.union(e.u, e.v) for e in edges)


def enumerate_spanning_trees_min(g: WeightedGraph) -> MstResult:
    """Exhaustive minimum over all spanning trees.

    Walks every acyclic ``(n-1)``-edge subset of the edges in sorted order.
    Branches that close a cycle or already weigh at least the best tree are
    cut, which never discards a strictly better tree because weights are
    nonnegative. Among equal-weight trees the first one found is kept.
    Guarded to ``n <= 10``.
    """
    if g.n > BRUTE_FORCE_MAX_VERTICES:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {g.n}")
    need = max(g.n - 1, 0)
    edges = g.edges
    best: list = [INFINITY, None]
    # component label per vertex; relabelled on merge and restored on backtrack
    comp = list(range(g.n + 1))

    def walk(i: int, chosen: list[Edge], weight: float) -> None:
        if weight >= best[0]:
            return
        if len(chosen) == need:
            best[0], best[1] = weight, tuple(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        e = edges[i]
        a, b = comp[e.u], comp[e.v]
        if a != b:
            moved = [x for x in range(1, g.n + 1) if comp[x] == b]
            for x in moved:
                comp[x] = a
            chosen.append(e)
            walk(i + 1, chosen, weight + e.weight)
            chosen.pop()
            for x in moved:
                comp[x] = b
        walk(i + 1, chosen, weight)

    walk(0, [], 0.0)
    if best[1] is None:
        raise DisconnectedGraph(f"graph on {g.n} vertices has no spanning tree")
    return MstResult(best[1], best[0])
