"""Pearson correlation over a whole series, its growing prefixes, and sliding windows."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field

import numpy as np

from eventlens.errors import LengthMismatch, SeriesTooShort, ZeroVariance
from eventlens.stats import critical_r
from eventlens.timeseries import AlignedSeries, align

RATE_MODES = ("level", "pct", "abs_pct")
NEWS_METRICS = ("mentions", "articles")


def pearson(x, y) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatch(f"shapes {x.shape} and {y.shape} differ")
    if len(x) < 2:
        raise LengthMismatch("need at least 2 observations")
    # exact test; a centred constant vector can leave rounding residue
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise ZeroVariance("correlation undefined for a constant vector")
    dx = x - x.mean()
    dy = y - y.mean()
    den = np.sqrt(np.dot(dx, dx) * np.dot(dy, dy))
    if den == 0:
        raise ZeroVariance("correlation undefined (zero denominator)")
    return float(min(1.0, max(-1.0, np.dot(dx, dy) / den)))


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    n: int
    df: int
    critical_r: float | None
    significant: bool


def correlation_test(x, y, alpha=0.05, two_tailed=True) -> CorrelationResult:
    r = pearson(x, y)
    n = len(x)
    df = n - 2
    if df < 1:
        return CorrelationResult(r, n, df, None, False)
    crit = critical_r(df, alpha)
    stat = abs(r) if two_tailed else r
    return CorrelationResult(r, n, df, crit, bool(stat >= crit))


def overall_correlation(news, rate) -> dict[tuple[str, str], float]:
    """r for every (rate_mode, news_metric) combination.

    ``news`` and ``rate`` should already be weekend-excluded. Keys are e.g.
    ``("level", "mentions")``.
    """
    table = {}
    for mode in RATE_MODES:
        for metric in NEWS_METRICS:
            a = align(news, rate, metric, mode)
            table[(mode, metric)] = pearson(a.news_values, a.rate_values)
    return table


def cumulative_correlation(aligned: AlignedSeries) -> list[tuple[dt.date, float]]:
    """r over each prefix of length 2..n, labelled by the prefix's last date.

    Prefixes where either side is constant give ``nan``.
    """
    if len(aligned) < 3:
        raise SeriesTooShort("cumulative correlation needs at least 3 observations")
    out = []
    x, y = aligned.news_values, aligned.rate_values
    for k in range(2, len(aligned) + 1):
        try:
            r = pearson(x[:k], y[:k])
        except ZeroVariance:
            r = float("nan")
        out.append((aligned.dates[k - 1], r))
    return out


@dataclass(frozen=True)
class WindowPoint:
    end_date: dt.date
    start_index: int
    r: float
    significant: bool


@dataclass(frozen=True)
class WindowCorrelationSeries:
    window_len: int
    critical_r: float
    dates: tuple[dt.date, ...] = field(repr=False)
    points: tuple[WindowPoint, ...] = field(repr=False)

    def window_dates(self, point: WindowPoint):
        return self.dates[point.start_index:point.start_index + self.window_len]

    def significant_points(self):
        return [p for p in self.points if p.significant]


def window_correlation(aligned: AlignedSeries, window_len=11, step=1, alpha=0.05,
                       two_tailed=True) -> WindowCorrelationSeries:
    """Sliding-window Pearson r, each window labelled by its end date.

    A window is significant when ``|r| >= critical_r(window_len - 2, alpha)``
    (``r >=`` when one-tailed). Constant windows get ``nan`` and are never
    significant.
    """
    n = len(aligned)
    if window_len < 3:
        raise ValueError("window_len must be at least 3")
    if step < 1:
        raise ValueError("step must be positive")
    if n < window_len:
        raise SeriesTooShort(f"{n} observations < window length {window_len}")
    crit = critical_r(window_len - 2, alpha)
    x, y = aligned.news_values, aligned.rate_values
    points = []
    for start in range(0, n - window_len + 1, step):
        stop = start + window_len
        try:
            r = pearson(x[start:stop], y[start:stop])
        except ZeroVariance:
            points.append(WindowPoint(aligned.dates[stop - 1], start, float("nan"), False))
            continue
        stat = abs(r) if two_tailed else r
        points.append(WindowPoint(aligned.dates[stop - 1], start, r, bool(stat >= crit)))
    return WindowCorrelationSeries(window_len, crit, aligned.dates, tuple(points))


def window_rows(wc: WindowCorrelationSeries):
    yield ["date", "r", "significant", "critical_r"]
    for p in wc.points:
        yield [p.end_date.isoformat(), _fmt(p.r), str(p.significant).lower(), repr(wc.critical_r)]


def cumulative_rows(points):
    yield ["date", "r"]
    for d, r in points:
        yield [d.isoformat(), _fmt(r)]


def overall_rows(table):
    yield ["rate_mode", *NEWS_METRICS]
    for mode in RATE_MODES:
        yield [mode, *(_fmt(table[(mode, m)]) for m in NEWS_METRICS)]


def _fmt(value):
    return "" if value is None or value != value else repr(float(value))
