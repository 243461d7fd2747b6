"""LDA topics for event windows via collapsed Gibbs sampling."""

from __future__ import annotations

import datetime as dt
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from eventlens.errors import BadTopicIndex, EmptyCorpus, EventLensError, KTooLarge, NoDocumentsInWindow

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

log = logging.getLogger(__name__)

TRACKED_WORDS = ("brexit", "deal", "delay", "referendum", "theresa", "vote")


@njit(cache=True, nogil=True)
def _gibbs_sweep(z, words, docs, nwt, nt, ndt, uniforms, alpha, eta, v_eta):
    k = nt.shape[0]
    p = np.empty(k)
    for i in range(z.shape[0]):
        w = words[i]
        d = docs[i]
        t = z[i]
        nwt[t, w] -= 1
        nt[t] -= 1
        ndt[d, t] -= 1
        total = 0.0
        for j in range(k):
            total += (ndt[d, j] + alpha) * (nwt[j, w] + eta) / (nt[j] + v_eta)
            p[j] = total
        target = uniforms[i] * total
        t = k - 1
        for j in range(k):
            if target < p[j]:
                t = j
                break
        z[i] = t
        nwt[t, w] += 1
        nt[t] += 1
        ndt[d, t] += 1


@dataclass(frozen=True)
class TopicModel:
    k: int
    vocab: tuple[str, ...]
    beta: np.ndarray = field(repr=False)
    theta: np.ndarray = field(repr=False)
    assignments: tuple[np.ndarray, ...] = field(repr=False)
    topic_word_counts: np.ndarray = field(repr=False)
    alpha_prior: float = 0.0
    eta_prior: float = 0.0
    seed: int = 0
    iterations: int = 0


def fit_lda(docs: Sequence[Sequence[str]], k: int, alpha_prior: float | None = None, eta_prior: float = 0.01,
            iterations: int = 1000, seed: int = 0,
            callback: Callable[[int, np.ndarray, np.ndarray], None] | None = None) -> TopicModel:
    """Collapsed Gibbs LDA with symmetric priors.

    ``alpha_prior`` defaults to ``50 / k``. ``callback(sweep, z, nwt)``, if
    given, runs after every sweep with the live assignment and count arrays.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not docs:
        raise EmptyCorpus("no documents")
    vocab = tuple(sorted({str(w) for doc in docs for w in doc}))
    if not vocab:
        raise EmptyCorpus("documents contain no tokens")
    n_tokens = sum(len(doc) for doc in docs)
    if k > n_tokens:
        raise KTooLarge(f"k={k} exceeds the {n_tokens} tokens available")
    alpha = 50.0 / k if alpha_prior is None else float(alpha_prior)
    eta = float(eta_prior)
    if alpha <= 0 or eta <= 0:
        raise ValueError("Dirichlet priors must be positive")

    index = {w: i for i, w in enumerate(vocab)}
    words = np.fromiter((index[str(w)] for doc in docs for w in doc), dtype=np.int64, count=n_tokens)
    doc_ids = np.repeat(np.arange(len(docs), dtype=np.int64), [len(doc) for doc in docs])
    V = len(vocab)

    rng = np.random.default_rng(seed)
    z = rng.integers(0, k, size=n_tokens).astype(np.int64)
    nwt = np.zeros((k, V), dtype=np.int64)
    ndt = np.zeros((len(docs), k), dtype=np.int64)
    np.add.at(nwt, (z, words), 1)
    np.add.at(ndt, (doc_ids, z), 1)
    nt = nwt.sum(axis=1)

    for sweep in range(iterations):
        _gibbs_sweep(z, words, doc_ids, nwt, nt, ndt, rng.random(n_tokens), alpha, eta, V * eta)
        if callback is not None:
            callback(sweep, z, nwt)

    beta = (nwt + eta) / (nt[:, None] + V * eta)
    theta = (ndt + alpha) / (ndt.sum(axis=1)[:, None] + k * alpha)
    bounds = np.cumsum([0] + [len(doc) for doc in docs])
    assignments = tuple(z[bounds[i]:bounds[i + 1]].copy() for i in range(len(docs)))
    return TopicModel(k, vocab, beta, theta, assignments, nwt, alpha, eta, seed, iterations)


def top_words(model: TopicModel, topic: int, n: int = 20) -> list[str]:
    """The ``n`` highest-beta words of ``topic``; ties go to the lexicographically smaller word."""
    if not (0 <= topic < model.k):
        raise BadTopicIndex(f"topic {topic} not in [0, {model.k})")
    row = model.beta[topic]
    order = sorted(range(len(model.vocab)), key=lambda i: (-row[i], model.vocab[i]))
    return [model.vocab[i] for i in order[:n]]


def model_dump(model: TopicModel, n: int = 20) -> str:
    lines = []
    index = {w: i for i, w in enumerate(model.vocab)}
    for t in range(model.k):
        lines.append(f"topic {t}")
        for w in top_words(model, t, n):
            lines.append(f"  {w}\t{model.beta[t, index[w]]!r}")
    return "\n".join(lines) + "\n"


def window_documents(corpus, event_date: dt.date, half_width: int = 5) -> list[tuple[str, ...]]:
    """Token lists of articles within ``half_width`` calendar days of the event."""
    lo = event_date - dt.timedelta(days=half_width)
    hi = event_date + dt.timedelta(days=half_width)
    return [a.tokens for a in corpus if lo <= a.date <= hi and a.tokens]


def event_window_topics(corpus, event_date: dt.date, half_width: int = 5, k: int = 5,
                        alpha_prior: float | None = None, eta_prior: float = 0.01,
                        iterations: int = 1000, seed: int = 0, top_n: int = 20):
    """Fit LDA to the articles around ``event_date``.

    Returns ``(model, words)`` where ``words`` is the union of every topic's
    top-``top_n`` words. ``k`` is clamped to the number of documents.
    """
    docs = window_documents(corpus, event_date, half_width)
    if not docs:
        raise NoDocumentsInWindow(f"no articles within {half_width} days of {event_date}")
    k_eff = min(k, len(docs), sum(len(d) for d in docs))
    model = fit_lda(docs, k_eff, alpha_prior, eta_prior, iterations, seed)
    words = set()
    for t in range(model.k):
        words.update(top_words(model, t, top_n))
    return model, words


def event_seed(seed: int, day: dt.date) -> int:
    return int(np.random.SeedSequence([seed, day.toordinal()]).generate_state(1)[0])


@dataclass(frozen=True)
class TrackedWordTimeline:
    words: tuple[str, ...]
    event_dates: tuple[dt.date, ...]
    present: np.ndarray = field(repr=False)  # events x words, bool
    models: dict = field(repr=False, default_factory=dict)
    errors: dict = field(repr=False, default_factory=dict)


def tracked_word_timeline(corpus, events, tracked: Sequence[str] = TRACKED_WORDS, half_width: int = 5,
                          k: int = 5, alpha_prior: float | None = None, eta_prior: float = 0.01,
                          iterations: int = 1000, seed: int = 0, top_n: int = 20,
                          parallel: int = 1) -> TrackedWordTimeline:
    """Mark which tracked words reach a top-``top_n`` list around each event.

    Each event gets its own seed derived from ``seed`` and the event date.
    Failing events are recorded in ``errors`` with an all-false row.
    """
    dates = sorted({getattr(e, "date", e) for e in events})
    if not dates:
        raise ValueError("no events given")

    def fit(day):
        try:
            return event_window_topics(corpus, day, half_width, k, alpha_prior, eta_prior,
                                       iterations, event_seed(seed, day), top_n)
        except EventLensError as exc:
            return exc

    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(fit, dates))
    else:
        results = [fit(d) for d in dates]

    present = np.zeros((len(dates), len(tracked)), dtype=bool)
    models, errors = {}, {}
    for i, (day, res) in enumerate(zip(dates, results)):
        if isinstance(res, Exception):
            log.info("topics for %s failed: %s", day, res)
            errors[day] = res
            continue
        model, words = res
        models[day] = model
        present[i] = [w in words for w in tracked]
    return TrackedWordTimeline(tuple(tracked), tuple(dates), present, models, errors)


def timeline_rows(timeline: TrackedWordTimeline):
    yield ["event_date", "word", "present"]
    for i, day in enumerate(timeline.event_dates):
        for j, w in enumerate(timeline.words):
            yield [day.isoformat(), w, str(bool(timeline.present[i, j])).lower()]
