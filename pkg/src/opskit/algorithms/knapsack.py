"""0/1 knapsack by dynamic programming over capacity."""

from __future__ import annotations

from typing import NamedTuple, Sequence


class KnapsackSolution(NamedTuple):
    best_value: float
    chosen: frozenset[int]


def knapsack_01(items: Sequence[tuple[int, float]], capacity: int) -> KnapsackSolution:
    """Maximize total value of ``(weight, value)`` items within ``capacity``.

    ``chosen`` holds 0-based item indices. Runs in ``O(len(items) * capacity)``.
    When several subsets reach the optimum, the backtrack walks from the
    last item down and skips an item whenever skipping it keeps the optimum.
    """
    if capacity < 0:
        raise ValueError("capacity must be >= 0")
    for i, (w, v) in enumerate(items):
        if w < 0 or v < 0 or int(w) != w:
            raise ValueError(f"item {i}: weight must be a nonnegative integer and value nonnegative")

    k = len(items)
    # best[i][c]: optimum over the first i items with capacity c
    best = [[0.0] * (capacity + 1)]
    for w, v in items:
        w = int(w)
        prev = best[-1]
        row = prev[:]
        for c in range(w, capacity + 1):
            cand = prev[c - w] + v
            if cand > row[c]:
                row[c] = cand
        best.append(row)

    chosen = set()
    c = capacity
    for i in range(k, 0, -1):
        if best[i][c] != best[i - 1][c]:
            chosen.add(i - 1)
            c -= int(items[i - 1][0])
    return KnapsackSolution(best[k][capacity], frozenset(chosen))
