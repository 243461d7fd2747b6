"""Mean-adjusted abnormal-return event studies and numeraire attribution.

For an event on trading day 0 with half-width ``h`` the expected return is the
mean simple return over the ``estimation_len`` trading days ending on day
``-(h + 1)``. Abnormal returns are ``AR_t = R_t - mean`` and the test
statistic is ``AR_t / s_AR`` with

    s_AR**2 = sum(AR_est**2) / (estimation_len - 2)

over the estimation window.
"""

from __future__ import annotations

import bisect
import datetime as dt
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from eventlens.errors import (
    DegenerateVariance,
    EventDateNotTraded,
    EventLensError,
    InsufficientHistory,
    MissingPair,
)
from eventlens.stats import t_critical
from eventlens.timeseries import RateSeries, pct_change

log = logging.getLogger(__name__)

NUMERAIRE_PAIRS = ("GBP/EUR", "GBP/USD", "EUR/USD")


@dataclass(frozen=True)
class EventStudyConfig:
    estimation_len: int = 150
    event_half_width: int = 5
    alpha: float = 0.10
    panel_alpha: float = 0.05
    # "estimation" or "event": which ARs feed s_AR
    variance_window: str = "estimation"
    # a missing event date moves to the next trading day within this many days
    max_shift_days: int = 5

    def __post_init__(self):
        if self.estimation_len < 3:
            raise ValueError("estimation_len must be at least 3")
        if self.event_half_width < 0:
            raise ValueError("event_half_width must be non-negative")
        if self.variance_window not in ("estimation", "event"):
            raise ValueError(f"unknown variance_window {self.variance_window!r}")
        if self.variance_window == "event" and self.event_half_width < 1:
            raise ValueError("event-window variance needs event_half_width >= 1")


@dataclass(frozen=True)
class EventStudyRow:
    date: dt.date | None
    relative_day: int
    level: float | None
    ret: float | None
    ar: float | None
    t_stat: float | None
    significant: bool

    @property
    def available(self):
        return self.ar is not None


@dataclass(frozen=True)
class EventStudyReport:
    pair: str
    event_date: dt.date
    traded_date: dt.date
    estimation_mean: float
    s_ar: float
    df: int
    critical_t: float
    rows: tuple[EventStudyRow, ...]
    estimation_dates: tuple[dt.date, dt.date]
    estimation_ar: np.ndarray = field(repr=False)

    def row(self, relative_day):
        return self.rows[relative_day + (len(self.rows) - 1) // 2]


def locate_event(dates: Sequence[dt.date], event_date: dt.date, max_shift_days: int = 5) -> int:
    """Index of ``event_date`` in ``dates`` or of the next trading day after it."""
    i = bisect.bisect_left(dates, event_date)
    if i == len(dates) or (dates[i] - event_date).days > max_shift_days:
        raise EventDateNotTraded(f"no trading day within {max_shift_days} days of {event_date}")
    return i


def run_event_study(series: RateSeries, event_date: dt.date, cfg: EventStudyConfig = EventStudyConfig(),
                    alpha: float | None = None) -> EventStudyReport:
    alpha = cfg.alpha if alpha is None else alpha
    h, L = cfg.event_half_width, cfg.estimation_len
    returns = pct_change(series)
    rdates = returns.dates
    idx = locate_event(rdates, event_date, cfg.max_shift_days)
    est_stop = idx - h
    est_start = est_stop - L
    if est_start < 0:
        raise InsufficientHistory(
            f"{series.pair} {event_date}: need {L} returns before day -{h}, have {max(est_stop, 0)}")
    est = returns.values[est_start:est_stop]
    mean = float(est.mean())
    est_ar = est - mean
    levels = dict(zip(series.dates, series.values.tolist()))

    event_ar = []
    raw_rows = []
    for k in range(-h, h + 1):
        j = idx + k
        if j >= len(rdates):
            raw_rows.append((k, None, None))
            continue
        r = float(returns.values[j])
        raw_rows.append((k, rdates[j], r))
        event_ar.append(r - mean)

    if cfg.variance_window == "estimation":
        df = L - 2
        s2 = float(np.dot(est_ar, est_ar)) / df
    else:
        df = 2 * h + 1 - 2
        ev = np.asarray(event_ar)
        s2 = float(np.dot(ev, ev)) / df
    s_ar = math.sqrt(s2)
    # returns rebuilt from levels carry ~1e-16 noise, so "constant" is relative
    if s_ar <= 1e-10 * float(np.max(np.abs(est))):
        raise DegenerateVariance(f"{series.pair} {event_date}: s_AR is zero, t undefined")
    crit = t_critical(df, alpha)

    rows = []
    for k, d, r in raw_rows:
        if d is None:
            rows.append(EventStudyRow(None, k, None, None, None, None, False))
            continue
        ar = r - mean
        t = ar / s_ar
        rows.append(EventStudyRow(d, k, levels[d], r, ar, t, abs(t) >= crit))
    return EventStudyReport(
        series.pair, event_date, rdates[idx], mean, s_ar, df, crit, tuple(rows),
        (rdates[est_start], rdates[est_stop - 1]), est_ar,
    )


def report_rows(report: EventStudyReport):
    yield ["date", "relative_day", "level", "return", "ar", "t_stat", "significant"]
    for r in report.rows:
        if not r.available:
            yield ["NA", str(r.relative_day), "NA", "NA", "NA", "NA", "NA"]
            continue
        yield [r.date.isoformat(), str(r.relative_day), repr(r.level), repr(r.ret),
               repr(r.ar), repr(r.t_stat), str(r.significant).lower()]


@dataclass(frozen=True)
class PanelCell:
    ar: float | None
    t_stat: float | None
    significant: bool
    reason: str = ""

    @property
    def available(self):
        return self.ar is not None


@dataclass(frozen=True)
class PanelRow:
    event_date: dt.date
    cells: dict  # pair -> PanelCell


def _panel_cell(series, event_date, cfg):
    try:
        rep = run_event_study(series, event_date, cfg, alpha=cfg.panel_alpha)
    except EventLensError as exc:
        log.info("panel cell %s %s not available: %s", series.pair, event_date, exc)
        return PanelCell(None, None, False, type(exc).__name__)
    row0 = rep.row(0)
    if not row0.available:
        return PanelCell(None, None, False, "NotAvailable")
    return PanelCell(row0.ar, row0.t_stat, row0.significant)


def run_event_study_panel(pairs: Sequence[RateSeries], events, cfg: EventStudyConfig = EventStudyConfig(),
                          parallel: int = 1) -> list[PanelRow]:
    """Event-day AR and significance for every (event, pair) cell.

    ``events`` holds dates or objects with a ``date`` attribute. Failed cells
    are kept as not-available rather than raised.
    """
    dates = sorted({getattr(e, "date", e) for e in events})
    jobs = [(d, s) for d in dates for s in pairs]
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            cells = list(pool.map(lambda job: _panel_cell(job[1], job[0], cfg), jobs))
    else:
        cells = [_panel_cell(s, d, cfg) for d, s in jobs]
    out = []
    it = iter(cells)
    for d in dates:
        out.append(PanelRow(d, {s.pair: next(it) for s in pairs}))
    return out


def panel_rows(panel: Sequence[PanelRow], pairs: Sequence[str]):
    header = ["event_date"]
    for p in pairs:
        header += [f"{p} ar", f"{p} significant"]
    yield header
    for row in panel:
        line = [row.event_date.isoformat()]
        for p in pairs:
            cell = row.cells[p]
            if cell.available:
                line += [repr(cell.ar), str(cell.significant).lower()]
            else:
                line += ["NA", "NA"]
        yield line


@dataclass(frozen=True)
class NumeraireVerdict:
    event_date: dt.date
    verdict: str
    evidence: dict  # pair -> (ar, significant)


def numeraire_verdict(row: PanelRow, pairs: Sequence[str] = NUMERAIRE_PAIRS) -> NumeraireVerdict:
    """Attribute a GBP/EUR move to GBP, EUR, both, or neither.

    ``pairs`` names the (home/foreign, home/numeraire, foreign/numeraire)
    columns. Unavailable cells count as not significant.
    """
    missing = [p for p in pairs if p not in row.cells]
    if missing:
        raise MissingPair(f"{row.event_date}: panel row lacks {', '.join(missing)}")
    cross, home, foreign = (row.cells[p] for p in pairs)
    evidence = {p: (row.cells[p].ar, row.cells[p].significant) for p in pairs}
    if cross.significant and home.significant and foreign.significant:
        verdict = "mixed"
    elif cross.significant and home.significant and not foreign.significant and \
            np.sign(home.ar) == np.sign(cross.ar):
        verdict = "gbp_driven"
    elif cross.significant and foreign.significant and not home.significant:
        verdict = "eur_driven"
    else:
        verdict = "inconclusive"
    return NumeraireVerdict(row.event_date, verdict, evidence)


def verdict_rows(verdicts: Sequence[NumeraireVerdict], pairs: Sequence[str] = NUMERAIRE_PAIRS):
    yield ["event_date", "verdict", *pairs]
    for v in verdicts:
        cells = []
        for p in pairs:
            ar, sig = v.evidence[p]
            cells.append("NA" if ar is None else f"{ar!r}{'*' if sig else ''}")
        yield [v.event_date.isoformat(), v.verdict, *cells]
