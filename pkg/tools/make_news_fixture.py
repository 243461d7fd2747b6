"""Regenerate ``src/eventlens/data/news_fixture.csv``.

The fixture is synthetic: a low background of Brexit coverage plus bursts
around well-known dates, each burst drawing on its own vocabulary. Article
text carries punctuation, stopwords, numbers and a boilerplate tail so the
full preprocessing pipeline is exercised; the Tokens column is left empty.

    python tools/make_news_fixture.py
"""

import csv
import datetime as dt
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "eventlens" / "data" / "news_fixture.csv"
START, END = dt.date(2016, 1, 1), dt.date(2019, 4, 19)
SEED = 20160623

BACKGROUND = (
    "government minister eu uk talks parliament london brussels negotiations economy pound market "
    "malta trade border ireland citizens business investment europe union british prime"
).split()
FILLER = "the a of to in and is that for on with as by at it was from this will be are has".split()
BOILERPLATE = " Independent journalism costs money. Support Times of Malta for the price of a coffee."

# (centre date, half-width in calendar days, peak article count, topic words)
BURSTS = [
    (dt.date(2016, 6, 24), 4, 22, "referendum vote leave remain result cameron ballot campaign polls".split()),
    (dt.date(2016, 10, 7), 3, 9, "article fifty trigger theresa may conference sterling flash".split()),
    (dt.date(2016, 12, 9), 3, 7, "court appeal parliament vote judges government".split()),
    (dt.date(2017, 1, 24), 3, 8, "supreme court ruling parliament appeal vote".split()),
    (dt.date(2017, 7, 18), 3, 7, "withdrawal bill repeal parliament deal".split()),
    (dt.date(2017, 11, 29), 3, 7, "divorce bill deal payment border".split()),
    (dt.date(2018, 11, 29), 3, 10, "withdrawal agreement deal endorsed leaders theresa".split()),
    (dt.date(2018, 12, 10), 3, 12, "meaningful vote delay theresa deal backstop".split()),
    (dt.date(2019, 1, 15), 3, 14, "meaningful vote defeat confidence theresa deal".split()),
    (dt.date(2019, 3, 20), 4, 16, "delay extension deal vote theresa article fifty".split()),
]


def article_text(rng, topic_words):
    n_words = int(rng.integers(25, 45))
    pool = BACKGROUND + (topic_words * 3 if topic_words else [])
    words = []
    for _ in range(n_words):
        r = rng.random()
        if r < 0.35:
            words.append(str(rng.choice(FILLER)))
        elif r < 0.42:
            words.append("Brexit")
        elif r < 0.46:
            words.append(str(int(rng.integers(1, 2020))))
        else:
            words.append(str(rng.choice(pool)))
    sentences, i = [], 0
    while i < len(words):
        k = int(rng.integers(6, 12))
        chunk = words[i:i + k]
        chunk[0] = chunk[0].capitalize()
        sentences.append(" ".join(chunk) + str(rng.choice([".", ".", "!", "?", ";"])))
        i += k
    return " ".join(sentences).replace(" eu ", " EU ").replace(" uk ", " UK's ") + BOILERPLATE


def main():
    rng = np.random.default_rng(SEED)
    rows = []
    day = START
    while day <= END:
        weekend = day.weekday() >= 5
        n = int(rng.poisson(0.9 if weekend else 1.6))
        topic = None
        for centre, half, peak, words in BURSTS:
            gap = abs((day - centre).days)
            if gap <= half:
                n = max(n, int(round(peak * (1 - gap / (half + 1)))))
                topic = words
        for j in range(n):
            source = "Reuters" if (j % 4 == 3) else "Times of Malta"
            rows.append([day.strftime("%d/%m/%Y"), article_text(rng, topic), "", source])
        day += dt.timedelta(days=1)
    with open(OUT, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["Date", "Article", "Tokens", "Source"])
        w.writerows(rows)
    print(f"wrote {len(rows)} articles to {OUT}")


if __name__ == "__main__":
    main()
