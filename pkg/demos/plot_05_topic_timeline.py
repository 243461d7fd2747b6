"""
Which words dominate each event window
======================================

An LDA model is fitted to the articles within five calendar days of each
event; a tracked word is "present" when it reaches some topic's top 20.
"""

import datetime as dt

from eventlens import data_path
from eventlens.corpus import load_news_csv, load_stopwords
from eventlens.topics import event_seed, event_window_topics, top_words, tracked_word_timeline

stop = load_stopwords(data_path("stopwords_en.txt"))
articles = load_news_csv(data_path("news_fixture.csv"), stop, ["Independent journalism costs money"])

day = dt.date(2016, 6, 24)
model, words = event_window_topics(articles, day, k=5, iterations=200, seed=event_seed(0, day))
for t in range(model.k):
    print(f"topic {t}:", " ".join(top_words(model, t, 8)))

events = [dt.date(2016, 6, 24), dt.date(2017, 3, 29), dt.date(2018, 11, 14), dt.date(2019, 3, 20)]
tracked = ("referendum", "deal", "vote", "delay")
timeline = tracked_word_timeline(articles, events, tracked, iterations=200)
print("date        " + " ".join(f"{w:>10s}" for w in tracked))
for d, row in zip(timeline.event_dates, timeline.present):
    print(d, " " + " ".join(f"{'x' if p else '.':>10s}" for p in row))
