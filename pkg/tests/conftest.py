import datetime as dt

import numpy as np
import pytest

from eventlens import load_ecb_reference
from eventlens.timeseries import RateSeries, resolve_pair

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion")


@pytest.fixture
def record_acceptance():
    def record(number, title, passed, detail=""):
        _ACCEPTANCE.append((number, title, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}" + (f" ({detail})" if detail else ""))


@pytest.fixture(scope="session")
def ecb():
    return load_ecb_reference()


@pytest.fixture(scope="session")
def fx(ecb):
    return {p: resolve_pair(p, ecb) for p in ("GBP/EUR", "GBP/USD", "EUR/USD")}


def weekdays(start, n):
    out, d = [], start
    while len(out) < n:
        if d.weekday() < 5:
            out.append(d)
        d += dt.timedelta(days=1)
    return out


def make_rates(levels, start=dt.date(2020, 1, 6), pair="AAA/BBB"):
    return RateSeries(pair, weekdays(start, len(levels)), np.asarray(levels, dtype=float))


def planted_episodes(n=250, starts=(40, 120, 200), seed=11):
    """Weekday news/rate fixture with three 11-day episodes where article
    counts spike and the rate level moves with them."""
    from eventlens.corpus import DailyNewsSeries

    rng = np.random.default_rng(seed)
    days = weekdays(dt.date(2018, 1, 1), n)
    counts = rng.poisson(2, n)
    levels = 1.15 + np.cumsum(rng.normal(0, 0.002, n))
    for s in starts:
        ramp = np.arange(11)
        counts[s:s + 11] = 4 + 2 * ramp + rng.integers(0, 2, 11)
        levels[s:s + 11] = levels[s - 1] - 0.004 * (ramp + 1)
        levels[s + 11:] += levels[s + 10] - levels[s + 11]
    news = DailyNewsSeries(days, counts, 3 * counts)
    return news, RateSeries("GBP/EUR", days, levels)


VOCAB_A = tuple(f"alpha{i:02d}" for i in range(25))
VOCAB_B = tuple(f"bravo{i:02d}" for i in range(25))


def planted_docs(seed=5, n_docs=10, length=50):
    """10 documents drawn from each of two disjoint vocabularies, interleaved."""
    rng = np.random.default_rng(seed)
    docs = []
    for _ in range(n_docs):
        docs.append([str(w) for w in rng.choice(VOCAB_A, length)])
        docs.append([str(w) for w in rng.choice(VOCAB_B, length)])
    return docs


def purity(words):
    """Share of ``words`` drawn from the better-matching planted vocabulary."""
    a = sum(w in VOCAB_A for w in words)
    b = sum(w in VOCAB_B for w in words)
    return max(a, b) / len(words)
