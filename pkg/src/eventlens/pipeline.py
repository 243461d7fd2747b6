"""End-to-end stage graph.

Stages and their prerequisites::

    ingest ─┬─────────────── correlate ── detect-events ─┬─ event-study
    rates ──┘                                            └─ topics
    rates ───────────────────────────────────────────────── event-study

A failed stage skips everything downstream of it; independent stages still
run. Every output goes through :class:`OutputWriter`, which writes
atomically and feeds the manifest.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from eventlens import corpus as corpus_mod
from eventlens.config import RunConfig
from eventlens.correlation import (
    cumulative_correlation,
    cumulative_rows,
    overall_correlation,
    overall_rows,
    window_correlation,
    window_rows,
)
from eventlens.errors import EventLensError
from eventlens.events import (
    QUANTILE_METHOD,
    WINDOW_METHOD,
    EventDate,
    detect_top_quantile_events,
    detect_window_events,
    event_rows,
)
from eventlens.eventstudy import (
    NUMERAIRE_PAIRS,
    EventStudyConfig,
    numeraire_verdict,
    panel_rows,
    report_rows,
    run_event_study,
    run_event_study_panel,
    verdict_rows,
)
from eventlens.fetch import fetch_rate_csv, pair_slug, raw_path
from eventlens.output import OutputWriter
from eventlens.timeseries import (
    align,
    carry_forward_weekends,
    exclude_weekends,
    load_rate_csv,
    resolve_pair,
    series_rows,
)
from eventlens.topics import model_dump, timeline_rows, tracked_word_timeline

log = logging.getLogger(__name__)

STAGES = ("ingest", "rates", "correlate", "detect-events", "event-study", "topics")
REQUIRES = {
    "ingest": (),
    "rates": (),
    "correlate": ("ingest", "rates"),
    "detect-events": ("correlate",),
    # event-study also runs on manual dates when detection is unavailable
    "event-study": ("rates",),
    "topics": ("detect-events",),
}
SUBCOMMAND_STAGES = {
    "ingest": ("ingest",),
    "correlate": ("ingest", "rates", "correlate"),
    "detect-events": ("ingest", "rates", "correlate", "detect-events"),
    "event-study": ("ingest", "rates", "correlate", "detect-events", "event-study"),
    "topics": ("ingest", "rates", "correlate", "detect-events", "topics"),
    "run-all": STAGES,
}


@dataclass
class PipelineResult:
    writer: OutputWriter
    errors: dict = field(default_factory=dict)  # stage -> message
    skipped: list = field(default_factory=list)
    state: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.errors and not self.skipped

    @property
    def exit_code(self):
        return 0 if self.ok else 1


def _event_study_config(cfg: RunConfig) -> EventStudyConfig:
    return EventStudyConfig(cfg.estimation_len, cfg.event_half_width, cfg.day_alpha, cfg.panel_alpha,
                            cfg.variance_window)


def _apply_weekends(cfg, series):
    if cfg.weekend_policy == "carry_forward":
        return carry_forward_weekends(series)
    return exclude_weekends(series)


def stage_ingest(cfg, st, out):
    if cfg.news_path is None:
        raise EventLensError("news_path is not configured")
    stopwords = corpus_mod.load_stopwords(cfg.stopword_path) if cfg.stopword_path else frozenset()
    articles = corpus_mod.load_news_csv(cfg.news_path, stopwords, cfg.markers, (cfg.study_start, cfg.study_end))
    daily = corpus_mod.aggregate_daily(articles, cfg.term, cfg.study_start, cfg.study_end, cfg.mention_mode)
    st["articles"] = articles
    st["daily"] = daily
    # the weekday series feeds correlation, the mean filter and the quantile cut
    st["news"] = exclude_weekends(daily)
    out.write_csv("articles.csv", corpus_mod.write_news_rows(articles))
    out.write_csv("news_daily.csv", _daily_rows(daily))


def _daily_rows(daily):
    yield ["date", "article_count", "mention_count"]
    for d, a, m in zip(daily.dates, daily.article_counts.tolist(), daily.mention_counts.tolist()):
        yield [d.isoformat(), str(a), str(m)]


def load_sources(cfg: RunConfig):
    """Raw configured series keyed by pair, fetched files included."""
    sources = {}
    for pair, (path, column) in sorted(cfg.rates.items()):
        sources[pair] = load_rate_csv(path, column, pair)
    for pair in sorted(cfg.fetch):
        if pair in sources:
            continue
        path = raw_path(cfg.raw_dir, pair, cfg.study_start, cfg.study_end)
        if path.exists():
            sources[pair] = load_rate_csv(path, cfg.fetch_value_column, pair)
    return sources


def stage_rates(cfg, st, out):
    sources = load_sources(cfg)
    wanted = list(dict.fromkeys((cfg.primary_pair, *cfg.panel_pairs, *cfg.crypto_pairs)))
    series, missing = {}, []
    for pair in wanted:
        try:
            series[pair] = _apply_weekends(cfg, resolve_pair(pair, sources))
        except EventLensError as exc:
            missing.append(f"{pair}: {exc}")
    for pair in sorted(series):
        out.write_csv(f"series/{pair_slug(pair)}.csv", series_rows(series[pair]))
    st["series"] = series
    if cfg.primary_pair not in series:
        raise EventLensError(f"primary pair unavailable; {'; '.join(missing)}")
    if missing:
        log.warning("rate series unavailable: %s", "; ".join(missing))


def stage_correlate(cfg, st, out):
    news, rate = st["news"], st["series"][cfg.primary_pair]
    table = overall_correlation(news, rate)
    aligned = align(news, rate, cfg.news_metric, cfg.rate_mode)
    wc = window_correlation(aligned, cfg.window_len, 1, cfg.window_alpha, cfg.two_tailed)
    st["window_corr"] = wc
    out.write_csv("correlation_overall.csv", overall_rows(table))
    out.write_csv("correlation_cumulative.csv", cumulative_rows(cumulative_correlation(aligned)))
    out.write_csv("correlation_window.csv", window_rows(wc))


def stage_detect(cfg, st, out):
    window_events = detect_window_events(st["window_corr"], st["news"])
    quantile_events = detect_top_quantile_events(st["news"], cfg.quantile)
    st["events"] = {WINDOW_METHOD: window_events, QUANTILE_METHOD: quantile_events}
    merged = sorted(window_events + quantile_events, key=lambda e: (e.date, e.method))
    out.write_csv("events.csv", event_rows(merged))


def _manual_events(cfg):
    return [EventDate(d, "manual", None, 0, 0) for d in cfg.extra_event_dates]


def stage_event_study(cfg, st, out):
    es_cfg = _event_study_config(cfg)
    series = st["series"]
    groups = dict(st.get("events", {}))
    if cfg.extra_event_dates:
        groups["manual"] = _manual_events(cfg)
    if not groups:
        raise EventLensError("no event dates: detection unavailable and extra_event_dates empty")

    primary = series[cfg.primary_pair]
    failures = []
    for day in sorted({e.date for evs in groups.values() for e in evs}):
        try:
            report = run_event_study(primary, day, es_cfg)
        except EventLensError as exc:
            failures.append(f"{day}: {exc}")
            continue
        out.write_csv(f"event_study/{day.isoformat()}_{pair_slug(cfg.primary_pair)}.csv", report_rows(report))
    if failures:
        log.warning("event studies skipped: %s", "; ".join(failures))

    panel_pairs = [p for p in cfg.panel_pairs if p in series]
    for method, evs in sorted(groups.items()):
        if not evs:
            continue
        panel = run_event_study_panel([series[p] for p in panel_pairs], evs, es_cfg, cfg.parallel)
        out.write_csv(f"panel_{method}.csv", panel_rows(panel, panel_pairs))
        if all(p in panel_pairs for p in NUMERAIRE_PAIRS):
            verdicts = [numeraire_verdict(row) for row in panel]
            out.write_csv(f"verdicts_{method}.csv", verdict_rows(verdicts))
    crypto = [p for p in cfg.crypto_pairs if p in series]
    crypto_events = groups.get(WINDOW_METHOD) or groups.get("manual")
    if crypto and crypto_events:
        panel = run_event_study_panel([series[p] for p in crypto], crypto_events, es_cfg, cfg.parallel)
        out.write_csv("panel_crypto.csv", panel_rows(panel, crypto))


def stage_topics(cfg, st, out):
    events = [e for evs in st["events"].values() for e in evs]
    if not events:
        raise EventLensError("no events to build a topic timeline for")
    timeline = tracked_word_timeline(
        st["articles"], events, cfg.tracked_words, cfg.lda_half_width, cfg.lda_k, cfg.lda_alpha, cfg.lda_eta,
        cfg.lda_iterations, cfg.seed, cfg.top_n, cfg.parallel,
    )
    out.write_csv("topics_timeline.csv", timeline_rows(timeline))
    parts = []
    for day in timeline.event_dates:
        if day in timeline.models:
            parts.append(f"# {day.isoformat()}\n{model_dump(timeline.models[day], cfg.top_n)}")
        else:
            parts.append(f"# {day.isoformat()}\nerror: {timeline.errors[day]}\n")
    out.write_text("topics_models.txt", "\n".join(parts))


RUNNERS = {
    "ingest": stage_ingest,
    "rates": stage_rates,
    "correlate": stage_correlate,
    "detect-events": stage_detect,
    "event-study": stage_event_study,
    "topics": stage_topics,
}


def run_pipeline(cfg: RunConfig, stages=STAGES) -> PipelineResult:
    cfg.validate()
    out = OutputWriter(cfg.out_dir)
    result = PipelineResult(out)
    done = set()
    for stage in STAGES:
        if stage not in stages:
            continue
        blocked = [r for r in REQUIRES[stage] if r in stages and r not in done]
        # event-study can fall back to manual dates without detection
        if stage == "event-study" and "detect-events" not in done and not cfg.extra_event_dates:
            blocked.append("detect-events")
        if blocked:
            log.error("stage %s skipped: needs %s", stage, ", ".join(blocked))
            result.skipped.append(stage)
            continue
        try:
            RUNNERS[stage](cfg, result.state, out)
        except (EventLensError, OSError) as exc:
            log.error("stage %s failed: %s", stage, exc)
            result.errors[stage] = f"{type(exc).__name__}: {exc}"
            continue
        done.add(stage)
    status = {s: ("ok" if s in done else "failed" if s in result.errors else "skipped")
              for s in STAGES if s in stages}
    out.write_manifest({"seed": cfg.seed, "stages": status})
    return result


def fetch_all(cfg: RunConfig, client=None) -> PipelineResult:
    """Download every ``fetch.<PAIR>`` source into ``raw_dir``."""
    cfg.validate()
    out = OutputWriter(cfg.out_dir)
    result = PipelineResult(out)
    for pair, template in sorted(cfg.fetch.items()):
        try:
            fetch_rate_csv(template, pair, cfg.study_start, cfg.study_end, cfg.raw_dir, cfg.fetch_retries,
                           cfg.fetch_timeout, client=client)
            load_rate_csv(raw_path(cfg.raw_dir, pair, cfg.study_start, cfg.study_end), cfg.fetch_value_column, pair)
        except EventLensError as exc:
            result.errors[f"fetch {pair}"] = str(exc)
    return result
