"""Aggregation of expert scores on the four-level scale 0..3."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import EmptyMatrix, ScoreOutOfScale

SCALE = (0, 1, 2, 3)
SCALE_LABELS = {0: "absent", 1: "low", 2: "good", 3: "very good"}


@dataclass(frozen=True)
class ScoreMatrix:
    """Per-expert indicator scores, or already-averaged indicator means.

    Published evaluations often report only the per-indicator means. Such
    data is carried in ``reported_means`` with no expert rows; when rows are
    present they take precedence.
    """

    names: tuple[str, ...]
    scores: tuple[tuple[int, ...], ...] = ()
    weights: tuple[float, ...] = ()
    reported_means: tuple[float, ...] = ()

    def __post_init__(self):
        k = len(self.names)
        if not self.weights:
            object.__setattr__(self, "weights", (1.0,) * k)
        if len(self.weights) != k:
            raise ValueError(f"expected {k} weights, got {len(self.weights)}")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be > 0")
        for j, row in enumerate(self.scores, start=1):
            if len(row) != k:
                raise ValueError(f"expert {j}: expected {k} scores, got {len(row)}")
            for v in row:
                if v not in SCALE:
                    raise ScoreOutOfScale(f"expert {j}: score {v} not in 0..3")
        if self.reported_means:
            if len(self.reported_means) != k:
                raise ValueError(f"expected {k} means, got {len(self.reported_means)}")
            if any(not 0 <= v <= 3 for v in self.reported_means):
                raise ScoreOutOfScale("reported means must lie in [0, 3]")

    @property
    def m(self) -> int:
        return len(self.scores)

    @property
    def k(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class AggregateReport:
    names: tuple[str, ...]
    means: tuple[float, ...]
    weights: tuple[float, ...]
    group_mean: float


def weighted_mean(values: Sequence[float], weights: Sequence[float]) -> float:
    return sum(w * v for w, v in zip(weights, values)) / sum(weights)


def aggregate_scores(s: ScoreMatrix) -> AggregateReport:
    """Per-indicator arithmetic means and their weighted group mean."""
    if s.scores:
        means = tuple(sum(row[i] for row in s.scores) / s.m for i in range(s.k))
    elif s.reported_means:
        means = tuple(float(v) for v in s.reported_means)
    else:
        raise EmptyMatrix("score matrix has no experts")
    if not means:
        raise EmptyMatrix("score matrix has no indicators")
    return AggregateReport(s.names, means, s.weights, weighted_mean(means, s.weights))
