from .chi2 import chi2_cdf, chi2_sf, chi_square_critical, gammainc_lower, gammainc_upper
from .concordance import ConcordanceResult, RankMatrix, TieWarning, kendall_w, validate_rank_matrix
from .fisher import FisherResult, angular, fisher_angular_test
from .normal import normal_quantile, one_sided_critical
from .scores import AggregateReport, ScoreMatrix, aggregate_scores

__all__ = [
    "AggregateReport",
    "ConcordanceResult",
    "FisherResult",
    "RankMatrix",
    "ScoreMatrix",
    "TieWarning",
    "aggregate_scores",
    "angular",
    "chi2_cdf",
    "chi2_sf",
    "chi_square_critical",
    "fisher_angular_test",
    "gammainc_lower",
    "gammainc_upper",
    "kendall_w",
    "normal_quantile",
    "one_sided_critical",
    "validate_rank_matrix",
]
