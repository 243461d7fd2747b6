"""
Correlating news volume with GBP/EUR
====================================

Overall, cumulative, and sliding 11-day Pearson correlation between daily
article counts and the exchange rate.
"""

import datetime as dt

import numpy as np

from eventlens import data_path, load_ecb_reference
from eventlens.corpus import aggregate_daily, load_news_csv, load_stopwords
from eventlens.correlation import cumulative_correlation, overall_correlation, window_correlation
from eventlens.timeseries import align, exclude_weekends, resolve_pair

stop = load_stopwords(data_path("stopwords_en.txt"))
articles = load_news_csv(data_path("news_fixture.csv"), stop, ["Independent journalism costs money"])
news = exclude_weekends(aggregate_daily(articles, "brexit", dt.date(2016, 1, 1), dt.date(2019, 4, 19)))

# GBP/EUR is the reciprocal of the ECB's EUR/GBP quote
gbp_eur = exclude_weekends(resolve_pair("GBP/EUR", load_ecb_reference()))

for (mode, metric), r in sorted(overall_correlation(news, gbp_eur).items()):
    print(f"{mode:8s} {metric:9s} r = {r:+.3f}")

aligned = align(news, gbp_eur, "articles", "level")
cum = cumulative_correlation(aligned)
print("cumulative r at the end of each year:")
for year in (2016, 2017, 2018):
    last = [r for d, r in cum if d.year == year][-1]
    print(f"  {year}: {last:+.3f}")

wc = window_correlation(aligned)
sig = wc.significant_points()
print(f"critical r for 11-day windows: {wc.critical_r:.3f}")
print(f"{len(sig)} of {len(wc.points)} windows significant")
r = np.array([p.r for p in wc.points])
print(f"window r ranges over [{np.nanmin(r):+.2f}, {np.nanmax(r):+.2f}]")
