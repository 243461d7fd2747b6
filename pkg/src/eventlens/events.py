"""Candidate event dates from news volume.

Two detectors:

* window correlation: dates inside significant news/rate correlation windows
  that also carry an above-average article count, one date kept per cluster;
* top quantile: days whose article count reaches the top ``q`` share.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from eventlens._dates import weekday_distance
from eventlens.correlation import WindowCorrelationSeries
from eventlens.corpus import DailyNewsSeries

WINDOW_METHOD = "window_correlation"
QUANTILE_METHOD = "top_quantile"


@dataclass(frozen=True)
class EventDate:
    date: dt.date
    method: str
    window_r: float | None
    article_count: int
    mention_count: int


def cluster_collapse(dates: Sequence[dt.date], span: int, article_counts: Mapping[dt.date, int]) -> list[dt.date]:
    """Keep one date per run of dates spaced at most ``span`` weekdays apart.

    The representative is the date with the most articles, earliest on ties.
    """
    if span < 1:
        raise ValueError("span must be positive")
    dates = sorted(set(dates))
    clusters: list[list[dt.date]] = []
    for d in dates:
        if clusters and weekday_distance(clusters[-1][-1], d) <= span:
            clusters[-1].append(d)
        else:
            clusters.append([d])
    # max() keeps the first maximal element, which is the earliest date
    return [max(c, key=lambda d: article_counts.get(d, 0)) for c in clusters]


def detect_window_events(wc: WindowCorrelationSeries, news: DailyNewsSeries,
                         span: int | None = None) -> list[EventDate]:
    """Event dates from significant correlation windows.

    ``news`` defines both the per-day counts and the mean used for the
    "above average" filter, so pass the weekday-only study series.
    """
    span = wc.window_len if span is None else span
    best_r: dict[dt.date, float] = {}
    for p in wc.significant_points():
        for d in wc.window_dates(p):
            if d not in best_r or abs(p.r) > abs(best_r[d]):
                best_r[d] = p.r
    if not best_r:
        return []
    mean_count = float(np.mean(news.article_counts)) if len(news) else 0.0
    counts = dict(zip(news.dates, news.article_counts.tolist()))
    mentions = dict(zip(news.dates, news.mention_counts.tolist()))
    busy = [d for d in sorted(best_r) if counts.get(d, 0) > mean_count]
    chosen = cluster_collapse(busy, span, counts)
    return [EventDate(d, WINDOW_METHOD, best_r[d], counts.get(d, 0), mentions.get(d, 0)) for d in chosen]


def quantile_threshold(counts, q: float) -> int:
    """Article count reached by the top ``ceil(q * N)`` days."""
    if not (0.0 < q < 1.0):
        raise ValueError(f"q must lie in (0, 1), got {q}")
    counts = np.sort(np.asarray(counts, dtype=np.int64))[::-1]
    if len(counts) == 0:
        raise ValueError("no days to rank")
    # guard against q * N landing a hair above an integer
    m = max(1, math.ceil(round(q * len(counts), 9)))
    return int(counts[m - 1])


def detect_top_quantile_events(news: DailyNewsSeries, q: float = 0.05) -> list[EventDate]:
    """All days whose article count is at least the top-``q`` threshold (ties kept)."""
    if len(news) == 0:
        return []
    threshold = quantile_threshold(news.article_counts, q)
    return [
        EventDate(d, QUANTILE_METHOD, None, int(a), int(m))
        for d, a, m in zip(news.dates, news.article_counts, news.mention_counts)
        if a >= threshold
    ]


def event_rows(events: Sequence[EventDate]):
    yield ["date", "method", "window_r", "article_count", "mention_count"]
    for e in events:
        r = "" if e.window_r is None else repr(float(e.window_r))
        yield [e.date.isoformat(), e.method, r, str(e.article_count), str(e.mention_count)]
