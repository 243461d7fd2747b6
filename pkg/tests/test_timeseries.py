import datetime as dt

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import make_rates
from eventlens.corpus import DailyNewsSeries
from eventlens.errors import EmptySeries, InsufficientOverlap, MissingColumn, NoOverlap, UnknownPair, UnparseableRow
from eventlens.timeseries import (
    RateSeries,
    ReturnSeries,
    abs_pct_change,
    align,
    carry_forward_weekends,
    derive_cross_rate,
    exclude_weekends,
    load_rate_csv,
    pct_change,
    resolve_pair,
    series_rows,
)

D = dt.date


def test_load_rate_csv_sorts(tmp_path):
    p = tmp_path / "r.csv"
    p.write_text("Date,Value\n03/01/2016,1.3\n01/01/2016,1.1\n02/01/2016,1.2\n")
    s = load_rate_csv(p)
    assert s.dates == (D(2016, 1, 1), D(2016, 1, 2), D(2016, 1, 3))
    assert s.values.tolist() == [1.1, 1.2, 1.3]


def test_load_rate_csv_iso_and_skips_empty(tmp_path):
    p = tmp_path / "r.csv"
    p.write_text("Date,Settle,Mid\n2016-06-23,1.3060,\n2016-06-24,,1.2\n2016-06-27,N/A,1.1\n")
    s = load_rate_csv(p, "Settle", "GBP/EUR")
    assert s.pair == "GBP/EUR"
    assert s.as_dict() == {D(2016, 6, 23): 1.306}
    assert len(load_rate_csv(p, "Mid")) == 2


def test_load_rate_csv_errors(tmp_path):
    p = tmp_path / "r.csv"
    p.write_text("Date,Mid\n01/01/2016,1.1\n")
    with pytest.raises(MissingColumn):
        load_rate_csv(p, "Value")
    p.write_text("Date,Value\n01/01/2016,1.1\nbad,1.2\n")
    with pytest.raises(UnparseableRow) as err:
        load_rate_csv(p)
    assert err.value.row_number == 3
    p.write_text("Date,Value\n01/01/2016,\n")
    with pytest.raises(EmptySeries):
        load_rate_csv(p)


def test_ecb_fixture_level(ecb):
    gbp_eur = ecb["EUR/GBP"].invert()
    assert gbp_eur.pair == "GBP/EUR"
    assert round(gbp_eur.as_dict()[D(2016, 6, 23)], 3) == 1.306


def test_exclude_weekends():
    s = RateSeries("X/Y", [D(2016, 6, 24), D(2016, 6, 25), D(2016, 6, 26), D(2016, 6, 27)], [1, 2, 3, 4])
    out = exclude_weekends(s)
    assert out.dates == (D(2016, 6, 24), D(2016, 6, 27))
    again = exclude_weekends(out)
    assert again.dates == out.dates and again.values.tolist() == out.values.tolist()
    fortnight = [D(2016, 6, 6) + dt.timedelta(days=i) for i in range(14)]
    news = DailyNewsSeries(fortnight, np.arange(14), np.arange(14))
    assert len(exclude_weekends(news)) == 10


def test_carry_forward_weekends():
    s = RateSeries("X/Y", [D(2016, 6, 24), D(2016, 6, 27)], [1.5, 2.0])
    out = carry_forward_weekends(s)
    assert out.as_dict() == {D(2016, 6, 24): 1.5, D(2016, 6, 25): 1.5, D(2016, 6, 26): 1.5, D(2016, 6, 27): 2.0}


def test_pct_change():
    s = RateSeries("GBP/EUR", [D(2016, 6, 23), D(2016, 6, 24)], [1.306, 1.238])
    r = pct_change(s)
    assert r.dates == (D(2016, 6, 24),)
    assert r.values[0] == pytest.approx(-0.05207, abs=5e-6)
    assert pct_change(make_rates([1, 1, 1])).values.tolist() == [0, 0]
    assert pct_change(make_rates([2, 1])).values.tolist() == [-0.5]
    with pytest.raises(EmptySeries):
        pct_change(make_rates([1.0]))


def test_abs_pct_change():
    assert abs_pct_change(make_rates([2, 1])).values.tolist() == [0.5]
    r = abs_pct_change(make_rates([1.0, 0.95, 0.969]))
    assert r.values == pytest.approx([0.05, 0.02])


@given(st.lists(st.floats(0.01, 100), min_size=2, max_size=60))
def test_returns_reconstruct_levels(levels):
    s = make_rates(levels)
    r = pct_change(s)
    rebuilt = levels[0] * np.cumprod(1 + r.values)
    np.testing.assert_allclose(rebuilt, levels[1:], rtol=1e-12)


def test_derive_cross_rate():
    eurusd = RateSeries("EUR/USD", [D(2016, 1, 4)], [1.10])
    eurgbp = RateSeries("EUR/GBP", [D(2016, 1, 4)], [0.88])
    gbpusd = derive_cross_rate(eurusd, eurgbp)
    assert gbpusd.pair == "GBP/USD"
    assert gbpusd.values[0] == pytest.approx(1.25, rel=1e-15)
    same = derive_cross_rate(make_rates([1.1, 1.2]), make_rates([1.1, 1.2]))
    assert same.values.tolist() == [1.0, 1.0]
    with pytest.raises(NoOverlap):
        derive_cross_rate(make_rates([1.0], D(2020, 1, 6)), make_rates([1.0], D(2021, 1, 6)))


@given(st.lists(st.tuples(st.floats(0.5, 2.0), st.floats(0.5, 2.0)), min_size=1, max_size=30))
def test_cross_rate_triangle_identity(pairs):
    eurusd = make_rates([a for a, _ in pairs], pair="EUR/USD")
    eurgbp = make_rates([b for _, b in pairs], pair="EUR/GBP")
    gbpusd = derive_cross_rate(eurusd, eurgbp)
    np.testing.assert_allclose(gbpusd.values * eurgbp.values, eurusd.values, rtol=1e-12)


def test_resolve_pair(ecb):
    gbp_usd = resolve_pair("GBP/USD", ecb)
    day = D(2016, 6, 24)
    assert gbp_usd.as_dict()[day] == pytest.approx(ecb["EUR/USD"].as_dict()[day] / ecb["EUR/GBP"].as_dict()[day])
    assert resolve_pair("USD/EUR", ecb).as_dict()[day] == pytest.approx(1 / ecb["EUR/USD"].as_dict()[day])
    assert resolve_pair("EUR/USD", ecb).pair == "EUR/USD"
    with pytest.raises(UnknownPair):
        resolve_pair("BTC/USD", ecb)


def _news(dates, counts):
    return DailyNewsSeries(dates, counts, [2 * c for c in counts])


def test_align_intersection():
    mon, tue, wed, thu = (D(2016, 6, 20) + dt.timedelta(days=i) for i in range(4))
    news = _news([mon, tue, wed], [1, 2, 3])
    rate = RateSeries("X/Y", [tue, wed, thu], [1.0, 1.1, 1.2])
    a = align(news, rate, "articles", "level")
    assert a.dates == (tue, wed)
    assert a.news_values.tolist() == [2, 3]
    assert a.rate_values.tolist() == [1.0, 1.1]
    assert align(news, rate, "mentions").news_values.tolist() == [4, 6]
    # pct mode loses the first rate date
    with pytest.raises(InsufficientOverlap):
        align(news, rate, "articles", "pct")


def test_align_identical_and_disjoint():
    days = [D(2016, 6, 20) + dt.timedelta(days=i) for i in range(5)]
    news = _news(days, [1, 2, 3, 4, 5])
    rate = RateSeries("X/Y", days, [1, 2, 3, 4, 5])
    assert len(align(news, rate)) == 5
    far = RateSeries("X/Y", [D(2017, 1, 2), D(2017, 1, 3)], [1, 2])
    with pytest.raises(InsufficientOverlap):
        align(news, far)


def test_align_accepts_return_series():
    days = [D(2016, 6, 20) + dt.timedelta(days=i) for i in range(3)]
    news = _news(days, [1, 2, 3])
    ret = ReturnSeries("X/Y", days, [-0.1, 0.2, -0.3])
    assert align(news, ret, rate_mode="abs_pct").rate_values.tolist() == [0.1, 0.2, 0.3]
    with pytest.raises(ValueError):
        align(news, ret, rate_mode="level")


def test_series_rows_iso():
    rows = list(series_rows(make_rates([1.5, 2.0])))
    assert rows[0] == ["Date", "Value"]
    assert rows[1] == ["2020-01-06", "1.5"]


def test_rate_series_invariants():
    with pytest.raises(ValueError):
        RateSeries("X/Y", [D(2016, 1, 2), D(2016, 1, 1)], [1, 1])
    with pytest.raises(ValueError):
        RateSeries("X/Y", [D(2016, 1, 1)], [0.0])
