"""Kendall's coefficient of concordance for m experts ranking n objects."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import DegenerateMatrix, OutOfRangeRank
from .chi2 import chi_square_critical

DEFAULT_ALPHA = 0.01


@dataclass(frozen=True)
class TieWarning:
    """An expert row that is not a permutation of ``1..n``."""

    expert: int  # 1-based row number
    duplicates: tuple[int, ...]
    missing: tuple[int, ...]

    def __str__(self) -> str:
        dup = ", ".join(map(str, self.duplicates)) or "none"
        miss = ", ".join(map(str, self.missing)) or "none"
        return f"expert {self.expert}: duplicate {dup}; missing {miss}"


@dataclass(frozen=True)
class RankMatrix:
    """``x[j][i]`` is the rank expert ``j`` gave object ``i``.

    ``labels`` are the object ids from the CSV header, ``1..n`` by default.
    """

    x: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(tuple(int(v) for v in row) for row in self.x))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(1, self.n + 1)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> RankMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.x[0]) if self.x else 0

    @property
    def tie_warnings(self) -> list[TieWarning]:
        return validate_rank_matrix(self)


@dataclass(frozen=True)
class ConcordanceResult:
    m: int
    n: int
    rank_sums: tuple[int, ...]
    s: float
    w: float
    chi_square: float
    df: int
    alpha: float
    critical: float
    significant: bool
    tie_corrected: bool = False
    tie_warnings: tuple[TieWarning, ...] = field(default=())


def validate_rank_matrix(r: RankMatrix) -> list[TieWarning]:
    """One warning per row that is not a permutation of ``1..n``."""
    expected = set(range(1, r.n + 1))
    warnings = []
    for j, row in enumerate(r.x, start=1):
        counts = Counter(row)
        dups = tuple(sorted(v for v, c in counts.items() if c > 1))
        missing = tuple(sorted(expected - counts.keys()))
        if dups or missing:
            warnings.append(TieWarning(j, dups, missing))
    return warnings


def _tie_term(row: Sequence[int]) -> int:
    return sum(t**3 - t for t in Counter(row).values())


def kendall_w(r: RankMatrix, alpha: float = DEFAULT_ALPHA, tie_correction: bool = False) -> ConcordanceResult:
    """Concordance coefficient ``W = 12 S / (m^2 (n^3 - n))``.

    ``S`` is the sum of squared deviations of the per-object rank sums from
    their empirical mean. The chi-square statistic ``12 S / (m n (n + 1))``
    (equal to ``m (n - 1) W``) is tested against ``n - 1`` degrees of
    freedom. By default no tie correction is applied; with
    ``tie_correction=True`` the denominator of ``W`` is reduced by
    ``m * sum(t^3 - t)`` over tied groups in each row.
    """
    m, n = r.m, r.n
    if m < 2 or n < 2:
        raise DegenerateMatrix(f"need at least 2 experts and 2 objects, got m={m}, n={n}")
    for j, row in enumerate(r.x, start=1):
        for i, v in enumerate(row, start=1):
            if not 1 <= v <= n:
                raise OutOfRangeRank(f"expert {j}, object {i}: rank {v} outside 1..{n}")

    rank_sums = tuple(sum(row[i] for row in r.x) for i in range(n))
    mean = sum(rank_sums) / n
    s = sum((ri - mean) ** 2 for ri in rank_sums)

    w_den = m * m * (n**3 - n)
    chi_den = m * n * (n + 1)
    if tie_correction:
        ties = sum(_tie_term(row) for row in r.x)
        w_den -= m * ties
        chi_den -= ties / (n - 1)
    w = 12.0 * s / w_den
    chi_square = 12.0 * s / chi_den

    df = n - 1
    critical = chi_square_critical(df, alpha)
    return ConcordanceResult(
        m=m,
        n=n,
        rank_sums=rank_sums,
        s=s,
        w=w,
        chi_square=chi_square,
        df=df,
        alpha=alpha,
        critical=critical,
        significant=chi_square > critical,
        tie_corrected=tie_correction,
        tie_warnings=tuple(validate_rank_matrix(r)),
    )
