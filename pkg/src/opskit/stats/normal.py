"""Standard normal quantiles (thin wrapper over :class:`statistics.NormalDist`)."""

from statistics import NormalDist

from ..errors import InvalidAlpha

_STD = NormalDist()


def normal_quantile(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise InvalidAlpha(f"probability must lie in (0, 1), got {p}")
    return _STD.inv_cdf(p)


def one_sided_critical(alpha: float) -> float:
    """Upper-tail z such that ``P(Z > z) = alpha``; 1.6449 for 0.05."""
    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"alpha must lie in (0, 1), got {alpha}")
    return _STD.inv_cdf(1.0 - alpha)
