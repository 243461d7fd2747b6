"""
Detecting major event dates
===========================

Two detectors: dates inside significant correlation windows with an
above-average article count, and days in the top 5% of article counts.
"""

import datetime as dt

from eventlens import data_path, load_ecb_reference
from eventlens.corpus import aggregate_daily, load_news_csv, load_stopwords
from eventlens.correlation import window_correlation
from eventlens.events import detect_top_quantile_events, detect_window_events
from eventlens.timeseries import align, exclude_weekends, resolve_pair

stop = load_stopwords(data_path("stopwords_en.txt"))
articles = load_news_csv(data_path("news_fixture.csv"), stop, ["Independent journalism costs money"])
news = exclude_weekends(aggregate_daily(articles, "brexit", dt.date(2016, 1, 1), dt.date(2019, 4, 19)))
gbp_eur = exclude_weekends(resolve_pair("GBP/EUR", load_ecb_reference()))

wc = window_correlation(align(news, gbp_eur, "articles", "level"))
print("window-correlation events (one per cluster):")
for e in detect_window_events(wc, news):
    print(f"  {e.date}  r={e.window_r:+.3f}  articles={e.article_count}")

print("top 5% article days:")
for e in detect_top_quantile_events(news, q=0.05):
    print(f"  {e.date}  articles={e.article_count}")
