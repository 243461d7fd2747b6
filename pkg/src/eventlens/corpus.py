"""Article ingestion, text normalisation and daily news aggregation.

The normalisation pipeline is fixed: trim boilerplate, clean (lowercase,
strip non-ASCII and punctuation, whitespace tokenise), drop stopwords,
drop all-digit tokens.
"""

from __future__ import annotations

import csv
import datetime as dt
import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from eventlens._dates import calendar_days, parse_date
from eventlens.errors import EmptyRange, MalformedUrl, MissingColumn, UnparseableRow

log = logging.getLogger(__name__)

NEWS_COLUMNS = ("Date", "Article", "Tokens", "Source")

_URL_DATE = re.compile(r"/(\d{8})/")
# anything that is not a lowercase ASCII letter, digit or whitespace
_NOT_TOKEN_CHAR = re.compile(r"[^a-z0-9\s]")


@dataclass(frozen=True)
class Article:
    date: dt.date
    raw_text: str
    tokens: tuple[str, ...]
    source: str = ""


@dataclass(frozen=True)
class DailyNewsSeries:
    """Per-day article and term-mention counts, dates strictly increasing."""

    dates: tuple[dt.date, ...]
    article_counts: np.ndarray = field(repr=False)
    mention_counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        a = np.asarray(self.article_counts, dtype=np.int64)
        m = np.asarray(self.mention_counts, dtype=np.int64)
        if not (len(self.dates) == len(a) == len(m)):
            raise ValueError("dates and counts differ in length")
        if any(x >= y for x, y in zip(self.dates, self.dates[1:])):
            raise ValueError("dates must be strictly increasing")
        if (a < 0).any() or (m < 0).any():
            raise ValueError("counts must be non-negative")
        object.__setattr__(self, "article_counts", a)
        object.__setattr__(self, "mention_counts", m)

    def __len__(self):
        return len(self.dates)

    def select(self, mask):
        mask = np.asarray(mask, dtype=bool)
        dates = tuple(d for d, keep in zip(self.dates, mask) if keep)
        return DailyNewsSeries(dates, self.article_counts[mask], self.mention_counts[mask])

    def metric(self, name):
        if name == "articles":
            return self.article_counts
        if name == "mentions":
            return self.mention_counts
        raise ValueError(f"unknown news metric {name!r}")

    def counts_on(self, day):
        """(article_count, mention_count) for ``day``; (0, 0) if absent."""
        try:
            i = self.dates.index(day)
        except ValueError:
            return 0, 0
        return int(self.article_counts[i]), int(self.mention_counts[i])


def extract_date_from_url(url: str) -> dt.date:
    """Date encoded as a ``/YYYYMMDD/`` path segment of an article URL."""
    m = _URL_DATE.search(url)
    if m is None:
        raise MalformedUrl(f"no /YYYYMMDD/ segment in {url!r}")
    digits = m.group(1)
    try:
        return dt.date(int(digits[:4]), int(digits[4:6]), int(digits[6:]))
    except ValueError as exc:
        raise MalformedUrl(f"invalid date {digits} in {url!r}: {exc}") from None


def trim_article(raw: str, boilerplate_markers: Sequence[str]) -> str:
    cut = len(raw)
    for marker in boilerplate_markers:
        if not marker:
            raise ValueError("boilerplate markers must be non-empty")
        i = raw.find(marker)
        if i != -1 and i < cut:
            cut = i
    return raw[:cut]


def clean_string(raw: str) -> list[str]:
    text = raw.lower().encode("ascii", "ignore").decode("ascii")
    text = _NOT_TOKEN_CHAR.sub("", text)
    return text.split()


def remove_stopwords(tokens: Sequence[str], stopwords) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def remove_numbers(tokens: Sequence[str]) -> list[str]:
    # str.isdigit also accepts non-ASCII digits; tokens are ASCII by now
    return [t for t in tokens if not (t.isascii() and t.isdigit())]


def preprocess(raw: str, stopwords=frozenset(), markers: Sequence[str] = ()) -> list[str]:
    return remove_numbers(remove_stopwords(clean_string(trim_article(raw, markers)), stopwords))


def load_stopwords(path) -> frozenset[str]:
    """Newline-delimited stopword file; blank lines and ``#`` comments ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
    return frozenset(words)


def load_news_csv(path, stopwords=frozenset(), markers: Sequence[str] = (),
                  study_range: tuple[dt.date, dt.date] | None = None) -> list[Article]:
    """Read the Date/Article/Tokens/Source news CSV.

    Rows with an empty ``Tokens`` cell are re-preprocessed from ``Article``.
    Articles dated outside ``study_range`` are dropped.
    """
    articles = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in NEWS_COLUMNS if c not in (reader.fieldnames or ())]
        if missing:
            raise MissingColumn(f"{path}: missing column(s) {', '.join(missing)}")
        dropped = 0
        for lineno, row in enumerate(reader, start=2):
            try:
                day = parse_date(row["Date"])
            except ValueError as exc:
                raise UnparseableRow(lineno, str(exc)) from None
            if study_range is not None and not (study_range[0] <= day <= study_range[1]):
                dropped += 1
                continue
            raw = row["Article"] or ""
            token_cell = (row["Tokens"] or "").strip()
            if token_cell:
                tokens = token_cell.split()
            else:
                tokens = preprocess(raw, stopwords, markers)
            articles.append(Article(day, raw, tuple(tokens), row["Source"] or ""))
    if dropped:
        log.info("dropped %d articles outside the study range", dropped)
    return articles


def write_news_rows(articles: Iterable[Article]):
    """Rows (header first) of the news CSV with ISO dates."""
    yield list(NEWS_COLUMNS)
    for a in articles:
        yield [a.date.isoformat(), a.raw_text, " ".join(a.tokens), a.source]


def count_mentions(article: Article, term: str, mode: str = "token") -> int:
    if mode == "token":
        return sum(1 for t in article.tokens if t == term)
    if mode == "substring":
        return article.raw_text.lower().count(term)
    raise ValueError(f"unknown mention mode {mode!r}")


def aggregate_daily(corpus: Iterable[Article], term: str, start: dt.date, end: dt.date,
                    mention_mode: str = "token") -> DailyNewsSeries:
    """Daily article and mention counts for every calendar day in ``[start, end]``."""
    if end < start:
        raise EmptyRange(f"empty date range {start} .. {end}")
    days = calendar_days(start, end)
    index = {d: i for i, d in enumerate(days)}
    articles = np.zeros(len(days), dtype=np.int64)
    mentions = np.zeros(len(days), dtype=np.int64)
    for art in corpus:
        i = index.get(art.date)
        if i is None:
            continue
        articles[i] += 1
        mentions[i] += count_mentions(art, term, mention_mode)
    return DailyNewsSeries(tuple(days), articles, mentions)
