import math

import pytest
from scipy import stats

from eventlens.errors import InvalidAlpha
from eventlens.stats import critical_r, t_critical, t_two_sided_cdf

# two-tailed critical t from a printed table (3 decimals)
T_TABLE = [
    (1, 0.05, 12.706),
    (2, 0.10, 2.920),
    (5, 0.01, 4.032),
    (9, 0.05, 2.262),
    (9, 0.50, 0.703),
    (10, 0.10, 1.812),
    (30, 0.01, 2.750),
    (120, 0.05, 1.980),
]


@pytest.mark.parametrize("df, alpha, table", T_TABLE)
def test_t_critical_matches_table(df, alpha, table):
    assert t_critical(df, alpha) == pytest.approx(table, abs=6e-4)


@pytest.mark.parametrize("df", [1, 2, 3, 4, 7, 9, 10, 33, 148, 149, 1000, 2000, 2001, 50_000, 10**6])
@pytest.mark.parametrize("alpha", [0.001, 0.01, 0.05, 0.1, 0.5, 0.9])
def test_t_critical_matches_scipy(df, alpha):
    assert t_critical(df, alpha) == pytest.approx(stats.t.ppf(1 - alpha / 2, df), abs=1e-8)


@pytest.mark.parametrize("df", [1, 2, 5, 12, 148])
def test_two_sided_cdf(df):
    for t in (0.1, 0.9, 2.0, 7.5):
        assert t_two_sided_cdf(t, df) == pytest.approx(1 - 2 * stats.t.sf(t, df), abs=1e-12)
    assert t_two_sided_cdf(0.0, df) == 0.0


def test_critical_r_nine_df():
    assert critical_r(9, 0.05) == pytest.approx(0.602, abs=1e-3)


def test_critical_r_half_alpha_against_table():
    t = 0.703
    assert critical_r(9, 0.5) == pytest.approx(t / math.sqrt(t * t + 9), abs=5e-4)


def test_critical_r_normal_limit():
    df = 10**6
    assert critical_r(df, 0.05) * math.sqrt(df) == pytest.approx(1.96, abs=1e-3)


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1, 1.5])
def test_invalid_alpha(alpha):
    with pytest.raises(InvalidAlpha):
        critical_r(9, alpha)


def test_invalid_df():
    with pytest.raises(ValueError):
        t_critical(0, 0.05)
    with pytest.raises(ValueError):
        t_critical(2.5, 0.05)
