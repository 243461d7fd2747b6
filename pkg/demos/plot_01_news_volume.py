"""
From raw articles to a daily news series
========================================

Articles are trimmed of boilerplate, tokenised, and counted per day.
"""

import datetime as dt

from eventlens import data_path
from eventlens.corpus import aggregate_daily, load_news_csv, load_stopwords, preprocess
from eventlens.timeseries import exclude_weekends

# a single article first, to see what the token pipeline keeps
stop = load_stopwords(data_path("stopwords_en.txt"))
raw = "MPs vote on the Brexit deal in 2019. Independent journalism costs money."
print(preprocess(raw, stop, ["Independent journalism costs money"]))

# the shipped corpus ships with an empty Tokens column, so every row is re-processed
articles = load_news_csv(data_path("news_fixture.csv"), stop, ["Independent journalism costs money"])
print(f"{len(articles)} articles")

news = aggregate_daily(articles, "brexit", dt.date(2016, 1, 1), dt.date(2019, 4, 19))
news = exclude_weekends(news)
print(f"{len(news)} weekdays, mean {news.article_counts.mean():.2f} articles per day")

busiest = news.article_counts.argsort()[::-1][:5]
for i in sorted(busiest):
    print(news.dates[i], news.article_counts[i], "articles,", news.mention_counts[i], "mentions")
