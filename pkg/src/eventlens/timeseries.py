"""Exchange-rate series: loading, weekend handling, returns, cross rates, alignment.

A pair ``A/B`` holds the number of ``B`` units per one ``A`` unit, so
``GBP/EUR`` around 1.3 in mid 2016 and ``EUR/GBP`` is its reciprocal.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass, field

import numpy as np

from eventlens._dates import is_weekend, parse_date
from eventlens.corpus import DailyNewsSeries
from eventlens.errors import (
    EmptySeries,
    InsufficientOverlap,
    MissingColumn,
    NoOverlap,
    UnknownPair,
    UnparseableRow,
)

# ECB files mark missing fixings with N/A
MISSING_CELLS = frozenset({"", "n/a", "na", "nan", "#n/a", "."})


def _check_dates(dates):
    if any(a >= b for a, b in zip(dates, dates[1:])):
        raise ValueError("dates must be strictly increasing")


@dataclass(frozen=True)
class RateSeries:
    pair: str
    dates: tuple[dt.date, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        values = np.asarray(self.values, dtype=float)
        if values.shape != (len(self.dates),):
            raise ValueError("dates and values differ in length")
        _check_dates(self.dates)
        if not np.all(values > 0):
            raise ValueError(f"{self.pair}: rate levels must be positive")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.dates)

    def select(self, mask):
        mask = np.asarray(mask, dtype=bool)
        return RateSeries(self.pair, [d for d, k in zip(self.dates, mask) if k], self.values[mask])

    def invert(self, pair=None):
        base, quote = split_pair(self.pair)
        return RateSeries(pair or f"{quote}/{base}", self.dates, 1.0 / self.values)

    def as_dict(self):
        return dict(zip(self.dates, self.values.tolist()))


@dataclass(frozen=True)
class ReturnSeries:
    pair: str
    dates: tuple[dt.date, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        values = np.asarray(self.values, dtype=float)
        if values.shape != (len(self.dates),):
            raise ValueError("dates and values differ in length")
        _check_dates(self.dates)
        if not np.all(values > -1):
            raise ValueError("simple returns must exceed -1")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.dates)

    def select(self, mask):
        mask = np.asarray(mask, dtype=bool)
        return ReturnSeries(self.pair, [d for d, k in zip(self.dates, mask) if k], self.values[mask])


@dataclass(frozen=True)
class AlignedSeries:
    dates: tuple[dt.date, ...]
    news_values: np.ndarray = field(repr=False)
    rate_values: np.ndarray = field(repr=False)
    news_metric: str = "mentions"
    rate_mode: str = "level"

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        x = np.asarray(self.news_values, dtype=float)
        y = np.asarray(self.rate_values, dtype=float)
        if not (len(self.dates) == len(x) == len(y)):
            raise ValueError("aligned sequences differ in length")
        if len(x) < 2:
            raise InsufficientOverlap(f"aligned length {len(x)} < 2")
        object.__setattr__(self, "news_values", x)
        object.__setattr__(self, "rate_values", y)

    def __len__(self):
        return len(self.dates)


def split_pair(pair):
    parts = pair.upper().split("/")
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"pair must look like BASE/QUOTE, got {pair!r}")
    return parts[0], parts[1]


def load_rate_csv(path, value_column="Value", pair="") -> RateSeries:
    """Load one value column of a rate CSV into a date-sorted :class:`RateSeries`.

    Dates may be ``DD/MM/YYYY`` or ISO. Rows whose value cell is empty (or an
    ``N/A`` style marker) are skipped.
    """
    points = {}
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        for col in ("Date", value_column):
            if col not in fields:
                raise MissingColumn(f"{path}: no {col!r} column (have {fields})")
        for lineno, row in enumerate(reader, start=2):
            cell = (row[value_column] or "").strip()
            if cell.lower() in MISSING_CELLS:
                continue
            try:
                day = parse_date(row["Date"] or "")
                value = float(cell)
            except ValueError as exc:
                raise UnparseableRow(lineno, str(exc)) from None
            if not value > 0:
                raise UnparseableRow(lineno, f"non-positive rate {cell}")
            if day in points:
                raise UnparseableRow(lineno, f"duplicate date {day}")
            points[day] = value
    if not points:
        raise EmptySeries(f"{path}: no usable rows in column {value_column!r}")
    dates = sorted(points)
    return RateSeries(pair or value_column, dates, np.array([points[d] for d in dates]))


def series_rows(series):
    """Date,Value rows (header first) with ISO dates."""
    yield ["Date", "Value"]
    for d, v in zip(series.dates, series.values.tolist()):
        yield [d.isoformat(), repr(v)]


def exclude_weekends(series):
    """Drop Saturday and Sunday entries from any dated series."""
    return series.select([not is_weekend(d) for d in series.dates])


def carry_forward_weekends(series: RateSeries) -> RateSeries:
    """Fill missing Saturdays/Sundays with the preceding Friday's level.

    Alternative to :func:`exclude_weekends` for sensitivity checks.
    """
    points = series.as_dict()
    for d, v in list(points.items()):
        if d.weekday() == 4:
            for k in (1, 2):
                points.setdefault(d + dt.timedelta(days=k), v)
    dates = sorted(points)
    return RateSeries(series.pair, dates, np.array([points[d] for d in dates]))


def pct_change(series: RateSeries) -> ReturnSeries:
    if len(series) < 2:
        raise EmptySeries(f"{series.pair}: need at least 2 points for returns")
    lv = series.values
    return ReturnSeries(series.pair, series.dates[1:], (lv[1:] - lv[:-1]) / lv[:-1])


def abs_pct_change(series: RateSeries) -> ReturnSeries:
    r = pct_change(series)
    return ReturnSeries(r.pair, r.dates, np.abs(r.values))


def _intersect(a_dates, b_dates):
    common = sorted(set(a_dates).intersection(b_dates))
    ia = {d: i for i, d in enumerate(a_dates)}
    ib = {d: i for i, d in enumerate(b_dates)}
    return common, [ia[d] for d in common], [ib[d] for d in common]


def derive_cross_rate(eur_usd: RateSeries, eur_gbp: RateSeries, pair=None) -> RateSeries:
    """Cross two quotes sharing a base: ``C/B`` over ``C/A`` gives ``A/B``.

    With ``EUR/USD`` and ``EUR/GBP`` this is USD per GBP, i.e. ``GBP/USD``.
    """
    common, i1, i2 = _intersect(eur_usd.dates, eur_gbp.dates)
    if not common:
        raise NoOverlap(f"{eur_usd.pair} and {eur_gbp.pair} share no dates")
    if pair is None:
        try:
            pair = f"{split_pair(eur_gbp.pair)[1]}/{split_pair(eur_usd.pair)[1]}"
        except ValueError:
            pair = "cross"
    return RateSeries(pair, common, eur_usd.values[i1] / eur_gbp.values[i2])


def resolve_pair(pair: str, available: dict) -> RateSeries:
    """Build ``pair`` from the series in ``available`` (keyed by pair name).

    Tries a direct match, the reciprocal, then a one-hop cross through any
    shared currency.
    """
    base, quote = split_pair(pair)
    pair = f"{base}/{quote}"
    table = {}
    for name, s in available.items():
        b, q = split_pair(name)
        table[(b, q)] = s
    if (base, quote) in table:
        s = table[(base, quote)]
        return RateSeries(pair, s.dates, s.values)
    if (quote, base) in table:
        return table[(quote, base)].invert(pair)

    def oriented(b, q):
        if (b, q) in table:
            return table[(b, q)]
        if (q, b) in table:
            return table[(q, b)].invert(f"{b}/{q}")
        return None

    currencies = sorted({c for key in table for c in key} - {base, quote})
    for via in currencies:
        to_quote = oriented(via, quote)
        to_base = oriented(via, base)
        if to_quote is not None and to_base is not None:
            return derive_cross_rate(to_quote, to_base, pair)
    raise UnknownPair(f"cannot build {pair} from {sorted(available)}")


def align(news: DailyNewsSeries, rate, news_metric="mentions", rate_mode="level") -> AlignedSeries:
    """Intersect a news series with a rate series on dates.

    ``rate`` may be a :class:`RateSeries` (transformed per ``rate_mode``) or a
    precomputed :class:`ReturnSeries` (used as-is for ``pct``, absolute value
    taken for ``abs_pct``).
    """
    if rate_mode not in ("level", "pct", "abs_pct"):
        raise ValueError(f"unknown rate mode {rate_mode!r}")
    if isinstance(rate, ReturnSeries):
        if rate_mode == "level":
            raise ValueError("level mode needs a RateSeries")
        transformed = rate if rate_mode == "pct" else ReturnSeries(rate.pair, rate.dates, np.abs(rate.values))
    elif rate_mode == "level":
        transformed = rate
    elif rate_mode == "pct":
        transformed = pct_change(rate)
    else:
        transformed = abs_pct_change(rate)
    common, i_news, i_rate = _intersect(news.dates, transformed.dates)
    if len(common) < 2:
        raise InsufficientOverlap(f"only {len(common)} overlapping dates")
    return AlignedSeries(
        common,
        news.metric(news_metric)[i_news].astype(float),
        transformed.values[i_rate],
        news_metric,
        rate_mode,
    )
