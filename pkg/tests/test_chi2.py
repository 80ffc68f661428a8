import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special, stats

from opskit.errors import InvalidAlpha
from opskit.stats import chi2_cdf, chi2_sf, chi_square_critical, gammainc_lower, gammainc_upper
from opskit.stats.normal import normal_quantile, one_sided_critical


def test_table_value_df15():
    x = chi_square_critical(15, 0.01)
    assert x == pytest.approx(30.578, abs=0.005)
    assert x == pytest.approx(stats.chi2.isf(0.01, 15), rel=1e-8)


def test_df1():
    x = chi_square_critical(1, 0.05)
    assert x == pytest.approx(3.841, abs=0.005)
    assert x == pytest.approx(stats.chi2.isf(0.05, 1), rel=1e-8)


def test_df2_closed_form():
    # for df = 2 the survival function is exp(-x/2)
    assert chi_square_critical(2, math.exp(-1)) == pytest.approx(2.0, rel=1e-12)
    for x in (0.1, 1.0, 5.0, 30.0):
        assert chi2_sf(x, 2) == pytest.approx(math.exp(-x / 2), rel=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1, 1.5])
def test_invalid_alpha(alpha):
    with pytest.raises(InvalidAlpha):
        chi_square_critical(3, alpha)


def test_invalid_df():
    with pytest.raises(ValueError):
        chi_square_critical(0, 0.05)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.05, 60), st.floats(0.0, 200))
def test_incomplete_gamma_against_scipy(a, x):
    assert gammainc_lower(a, x) == pytest.approx(special.gammainc(a, x), rel=1e-10, abs=1e-14)
    assert gammainc_upper(a, x) == pytest.approx(special.gammaincc(a, x), rel=1e-9, abs=1e-14)


@pytest.mark.parametrize("df", [1, 2, 3, 5, 10, 15, 30, 100])
@pytest.mark.parametrize("alpha", [0.1, 0.05, 0.01, 0.001, 1e-6, 0.5, 0.9])
def test_critical_against_scipy(df, alpha):
    x = chi_square_critical(df, alpha)
    assert x == pytest.approx(stats.chi2.isf(alpha, df), rel=1e-8)
    assert chi2_cdf(x, df) == pytest.approx(1 - alpha, abs=1e-12)


def test_monotonicity():
    alphas = [0.1, 0.05, 0.01]
    table = {(df, a): chi_square_critical(df, a) for df in range(1, 31) for a in alphas}
    for a in alphas:
        assert all(table[(df, a)] < table[(df + 1, a)] for df in range(1, 30))
    for df in range(1, 31):
        assert table[(df, 0.1)] < table[(df, 0.05)] < table[(df, 0.01)]


def test_normal_quantiles():
    assert one_sided_critical(0.05) == pytest.approx(1.6449, abs=5e-5)
    assert f"{one_sided_critical(0.05):.2f}" == "1.64"
    for p in (0.001, 0.025, 0.3, 0.5, 0.8, 0.999):
        assert normal_quantile(p) == pytest.approx(stats.norm.ppf(p), abs=1e-8)
    with pytest.raises(InvalidAlpha):
        one_sided_critical(1.0)
