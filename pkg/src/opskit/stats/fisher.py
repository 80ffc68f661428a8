"""Fisher's angular (arcsine) criterion for comparing two proportions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import InvalidProportion
from .normal import one_sided_critical

DEFAULT_ALPHA = 0.05


@dataclass(frozen=True)
class FisherResult:
    p1: float
    n1: int
    p2: float
    n2: int
    phi1: float
    phi2: float
    phi_emp: float
    alpha: float
    phi_crit: float
    significant: bool


def angular(p: float) -> float:
    """``2 * asin(sqrt(p))``, in radians on ``[0, pi]``."""
    return 2.0 * math.asin(math.sqrt(p))


def fisher_angular_test(p1: float, n1: int, p2: float, n2: int, alpha: float = DEFAULT_ALPHA) -> FisherResult:
    """Compare proportions ``p1`` (of ``n1``) and ``p2`` (of ``n2``).

    ``phi_emp = |phi1 - phi2| * sqrt(n1 n2 / (n1 + n2))`` is judged against
    the one-sided standard normal quantile at ``alpha``.
    """
    for name, p in (("p1", p1), ("p2", p2)):
        if not 0.0 <= p <= 1.0:
            raise InvalidProportion(f"{name}={p} outside [0, 1]")
    for name, k in (("n1", n1), ("n2", n2)):
        if k < 1:
            raise InvalidProportion(f"{name}={k} must be >= 1")
    phi1, phi2 = angular(p1), angular(p2)
    phi_emp = abs(phi1 - phi2) * math.sqrt(n1 * n2 / (n1 + n2))
    crit = one_sided_critical(alpha)
    return FisherResult(p1, n1, p2, n2, phi1, phi2, phi_emp, alpha, crit, phi_emp > crit)
