"""News-volume event detection and exchange-rate event studies."""

from importlib import resources

from eventlens.corpus import Article, DailyNewsSeries, aggregate_daily, load_news_csv, preprocess
from eventlens.correlation import cumulative_correlation, overall_correlation, pearson, window_correlation
from eventlens.events import EventDate, cluster_collapse, detect_top_quantile_events, detect_window_events
from eventlens.eventstudy import (
    EventStudyConfig,
    numeraire_verdict,
    run_event_study,
    run_event_study_panel,
)
from eventlens.stats import critical_r, t_critical
from eventlens.timeseries import (
    RateSeries,
    ReturnSeries,
    align,
    derive_cross_rate,
    exclude_weekends,
    load_rate_csv,
    pct_change,
    resolve_pair,
)
from eventlens.topics import event_window_topics, fit_lda, top_words, tracked_word_timeline

__version__ = "0.1.0"


def data_path(name):
    """Path to a file shipped in ``eventlens/data``."""
    return resources.files("eventlens").joinpath("data", name)


def load_ecb_reference():
    """EUR/GBP and EUR/USD ECB reference rates, June 2015 to April 2019."""
    path = data_path("ecb_eurofxref_2015_2019.csv")
    return {
        "EUR/GBP": load_rate_csv(path, "GBP", "EUR/GBP"),
        "EUR/USD": load_rate_csv(path, "USD", "EUR/USD"),
    }


__all__ = [
    "Article", "DailyNewsSeries", "EventDate", "EventStudyConfig", "RateSeries", "ReturnSeries",
    "aggregate_daily", "align", "cluster_collapse", "critical_r", "cumulative_correlation", "data_path",
    "derive_cross_rate", "detect_top_quantile_events", "detect_window_events", "event_window_topics",
    "exclude_weekends", "fit_lda", "load_ecb_reference", "load_news_csv", "load_rate_csv",
    "numeraire_verdict", "overall_correlation", "pct_change", "pearson", "preprocess", "resolve_pair",
    "run_event_study", "run_event_study_panel", "t_critical", "top_words", "tracked_word_timeline",
    "window_correlation",
]
