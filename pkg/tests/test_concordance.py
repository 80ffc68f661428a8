import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opskit.errors import DegenerateMatrix, OutOfRangeRank
from opskit.stats import RankMatrix, TieWarning, kendall_w, validate_rank_matrix

# Exact rational values from reference_w on the Table 1 fixture.
TABLE1_RANK_SUMS = (160, 129, 103, 127, 118, 97, 133, 174, 191, 178, 161, 193, 194, 161, 224, 242)
TABLE1_S = Fraction(420319, 16)
TABLE1_W = Fraction(420319, 1963840)


def reference_w(rows):
    """Independent exact-arithmetic Kendall's W: (S, W, chi-square) as Fractions."""
    m, n = len(rows), len(rows[0])
    sums = [sum(Fraction(row[i]) for row in rows) for i in range(n)]
    mean = sum(sums) / n
    s = sum((x - mean) ** 2 for x in sums)
    return s, 12 * s / (m * m * (n**3 - n)), 12 * s / (m * n * (n + 1))


@st.composite
def permutation_matrices(draw, max_m=12, max_n=10):
    m = draw(st.integers(2, max_m))
    n = draw(st.integers(2, max_n))
    rows = [draw(st.permutations(range(1, n + 1))) for _ in range(m)]
    return RankMatrix.from_rows(rows)


def test_table1_against_reference(table1):
    res = kendall_w(table1)
    s, w, chi = reference_w(table1.x)
    assert (s, w) == (TABLE1_S, TABLE1_W)
    assert res.rank_sums == TABLE1_RANK_SUMS
    assert res.s == pytest.approx(float(s), rel=1e-12)
    assert res.w == pytest.approx(float(w), rel=1e-9)
    assert res.chi_square == pytest.approx(float(chi), rel=1e-9)
    assert res.df == 15
    assert res.critical == pytest.approx(30.578, abs=0.005)
    assert res.significant


def test_table1_column_total(table1):
    m, n = table1.m, table1.n
    assert sum(sum(row) for row in table1.x) == m * n * (n + 1) // 2 + 1


def test_table1_single_tie_warning(table1):
    assert validate_rank_matrix(table1) == [TieWarning(5, (16,), (15,))]
    assert str(table1.tie_warnings[0]) == "expert 5: duplicate 16; missing 15"


def test_validate_small_cases():
    assert validate_rank_matrix(RankMatrix.from_rows([[1, 2, 3], [3, 2, 1]])) == []
    assert validate_rank_matrix(RankMatrix.from_rows([[1, 1, 3]])) == [TieWarning(1, (1,), (2,))]


@pytest.mark.parametrize("m", [2, 5, 19])
@pytest.mark.parametrize("n", [3, 16])
def test_identical_rows_give_one(m, n):
    perm = random.Random(m * n).sample(range(1, n + 1), n)
    assert kendall_w(RankMatrix.from_rows([perm] * m)).w == 1.0


def test_degenerate_and_out_of_range():
    with pytest.raises(DegenerateMatrix):
        kendall_w(RankMatrix.from_rows([[1, 2, 3]]))
    with pytest.raises(DegenerateMatrix):
        kendall_w(RankMatrix.from_rows([[1], [1]]))
    with pytest.raises(OutOfRangeRank):
        kendall_w(RankMatrix.from_rows([[1, 2, 4], [1, 2, 3]]))


def test_tie_corrected_variant():
    rows = [[1, 2, 3, 4], [1, 2, 3, 4], [2, 2, 3, 4]]
    plain = kendall_w(RankMatrix.from_rows(rows))
    corrected = kendall_w(RankMatrix.from_rows(rows), tie_correction=True)
    assert corrected.tie_corrected and not plain.tie_corrected
    # one tied pair: t^3 - t = 6
    assert corrected.w == pytest.approx(12 * plain.s / (9 * 60 - 3 * 6))
    assert corrected.chi_square == pytest.approx(3 * 3 * corrected.w, rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(permutation_matrices())
def test_w_in_unit_interval_and_matches_reference(r):
    res = kendall_w(r)
    _, w, chi = reference_w(r.x)
    assert 0.0 <= res.w <= 1.0
    assert res.w == pytest.approx(float(w), rel=1e-9, abs=1e-15)
    assert res.chi_square == pytest.approx(r.m * (r.n - 1) * res.w, rel=1e-12, abs=1e-15)
    assert res.significant == (res.chi_square > res.critical)


@settings(max_examples=100, deadline=None)
@given(permutation_matrices(), st.randoms())
def test_w_invariant_under_relabeling(r, rnd):
    cols = list(range(r.n))
    rnd.shuffle(cols)
    rows = list(r.x)
    rnd.shuffle(rows)
    permuted = RankMatrix.from_rows([[row[c] for c in cols] for row in rows])
    assert kendall_w(permuted).w == pytest.approx(kendall_w(r).w, rel=1e-12, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(permutation_matrices())
def test_w_one_iff_rows_identical(r):
    identical = len(set(r.x)) == 1
    assert (kendall_w(r).w == 1.0) == identical
