import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from opskit.errors import EmptyMatrix, InvalidProportion, ScoreOutOfScale
from opskit.io import fixture_text, parse_score_csv
from opskit.stats import ScoreMatrix, aggregate_scores, angular, fisher_angular_test

TECH_MEANS = (2.1, 2.4, 2.1, 2.56, 2.0, 2.0, 2.8)
PSYCH_MEANS = (2.6, 2.7, 2.5, 2.8, 2.8, 2.6, 2.81, 2.75, 2.75)


def test_fixtures_carry_published_means():
    tech = parse_score_csv(fixture_text("scores_tech.csv"))
    psych = parse_score_csv(fixture_text("scores_psych.csv"))
    assert tech.reported_means == TECH_MEANS and tech.k == 7
    assert psych.reported_means == PSYCH_MEANS and psych.k == 9


def test_group_means():
    tech = aggregate_scores(parse_score_csv(fixture_text("scores_tech.csv")))
    psych = aggregate_scores(parse_score_csv(fixture_text("scores_psych.csv")))
    assert tech.group_mean == pytest.approx(sum(TECH_MEANS) / 7, rel=1e-12)
    assert tech.group_mean == pytest.approx(2.28, abs=0.005)
    assert psych.group_mean == pytest.approx(24.31 / 9, rel=1e-12)
    assert psych.group_mean == pytest.approx(2.70, abs=0.01)


def test_raw_scores():
    s = ScoreMatrix(("a", "b"), ((0, 3), (2, 3), (1, 3)))
    rep = aggregate_scores(s)
    assert rep.means == (1.0, 3.0) and rep.group_mean == 2.0
    zero = aggregate_scores(ScoreMatrix(("a", "b", "c"), ((0, 0, 0),) * 4))
    assert zero.means == (0.0, 0.0, 0.0) and zero.group_mean == 0.0


def test_weights():
    rep = aggregate_scores(ScoreMatrix(("a", "b"), ((1, 3),), weights=(3.0, 1.0)))
    assert rep.group_mean == pytest.approx(1.5)


def test_empty_and_out_of_scale():
    with pytest.raises(EmptyMatrix):
        aggregate_scores(ScoreMatrix(("a",)))
    with pytest.raises(ScoreOutOfScale):
        ScoreMatrix(("a",), ((4,),))


@given(
    st.lists(st.lists(st.integers(0, 3), min_size=4, max_size=4), min_size=1, max_size=10),
    st.lists(st.floats(0.1, 10), min_size=4, max_size=4),
    st.floats(0.01, 100),
)
def test_group_mean_scale_invariant(rows, weights, factor):
    names = ("a", "b", "c", "d")
    base = aggregate_scores(ScoreMatrix(names, tuple(map(tuple, rows)), tuple(weights)))
    scaled = aggregate_scores(ScoreMatrix(names, tuple(map(tuple, rows)), tuple(w * factor for w in weights)))
    assert scaled.group_mean == pytest.approx(base.group_mean, rel=1e-9)
    assert all(0 <= v <= 3 for v in base.means)


def test_fisher_training_groups():
    res = fisher_angular_test(0.53, 32, 0.33, 60)
    assert 1.80 <= res.phi_emp <= 1.90
    # 2*asin(sqrt(p)) == acos(1 - 2p)
    expected = abs(math.acos(1 - 2 * 0.53) - math.acos(1 - 2 * 0.33)) * math.sqrt(32 * 60 / 92)
    assert res.phi_emp == pytest.approx(expected, rel=1e-12)
    assert f"{res.phi_emp:.2f}" == "1.86"
    assert f"{res.phi_crit:.2f}" == "1.64"
    assert res.significant


def test_fisher_equal_proportions():
    res = fisher_angular_test(0.4, 10, 0.4, 20)
    assert res.phi_emp == 0 and not res.significant


def test_fisher_extremes():
    res = fisher_angular_test(1.0, 2, 0.0, 2)
    assert res.phi1 == pytest.approx(math.pi) and res.phi2 == 0
    assert res.phi_emp == pytest.approx(math.pi)
    assert res.significant


def test_fisher_rejects_bad_input():
    with pytest.raises(InvalidProportion):
        fisher_angular_test(1.2, 5, 0.1, 5)
    with pytest.raises(InvalidProportion):
        fisher_angular_test(0.2, 0, 0.1, 5)


@given(st.floats(0, 1), st.integers(1, 500), st.floats(0, 1), st.integers(1, 500))
def test_fisher_symmetric(p1, n1, p2, n2):
    a = fisher_angular_test(p1, n1, p2, n2)
    b = fisher_angular_test(p2, n2, p1, n1)
    assert a.phi_emp == pytest.approx(b.phi_emp, rel=1e-12)
    assert 0 <= angular(p1) <= math.pi
