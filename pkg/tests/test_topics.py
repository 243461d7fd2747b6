import datetime as dt
from collections import Counter

import numpy as np
import pytest

from conftest import VOCAB_A, planted_docs, purity
from eventlens.corpus import Article
from eventlens.errors import BadTopicIndex, EmptyCorpus, KTooLarge, NoDocumentsInWindow
from eventlens.topics import (
    event_seed,
    event_window_topics,
    fit_lda,
    model_dump,
    timeline_rows,
    top_words,
    tracked_word_timeline,
    window_documents,
)

D = dt.date


@pytest.fixture(scope="module")
def planted_model():
    return fit_lda(planted_docs(), k=2, iterations=1000, seed=42)


def _normalized(model):
    return (np.allclose(model.beta.sum(axis=1), 1.0, rtol=0, atol=1e-9)
            and np.allclose(model.theta.sum(axis=1), 1.0, rtol=0, atol=1e-9))


def test_single_doc_model():
    m = fit_lda([["deal"]], k=1, iterations=20)
    assert m.beta.tolist() == [[1.0]]
    assert top_words(m, 0, n=1) == ["deal"]


def test_planted_purity(planted_model):
    assert _normalized(planted_model)
    tops = [top_words(planted_model, t, 20) for t in range(2)]
    assert all(purity(t) >= 0.9 for t in tops)
    # the two topics pick different vocabularies
    assert (tops[0][0] in VOCAB_A) != (tops[1][0] in VOCAB_A)


def test_determinism(planted_model):
    again = fit_lda(planted_docs(), k=2, iterations=1000, seed=42)
    assert np.array_equal(again.beta, planted_model.beta)
    assert np.array_equal(again.theta, planted_model.theta)
    other = fit_lda(planted_docs(), k=2, iterations=50, seed=43)
    assert _normalized(other)


def test_permuting_documents_only_relabels_topics(planted_model):
    docs = planted_docs()
    order = np.random.default_rng(0).permutation(len(docs))
    m = fit_lda([docs[i] for i in order], k=2, iterations=1000, seed=42)
    sets = Counter(frozenset(top_words(m, t)) for t in range(2))
    base = Counter(frozenset(top_words(planted_model, t)) for t in range(2))
    assert sets == base


def test_counts_conserved_every_sweep():
    docs = planted_docs(n_docs=4, length=20)
    freq = Counter(w for d in docs for w in d)
    vocab = sorted(freq)
    target = np.array([freq[w] for w in vocab])
    seen = []

    def check(sweep, z, nwt):
        seen.append(sweep)
        assert np.array_equal(nwt.sum(axis=0), target)
        assert nwt.sum() == len(z)

    m = fit_lda(docs, k=3, iterations=15, seed=1, callback=check)
    assert seen == list(range(15))
    assert _normalized(m)
    assert [len(a) for a in m.assignments] == [len(d) for d in docs]


def test_top_words_truncation_and_ties():
    m = fit_lda([["b", "a", "c"]], k=1, iterations=5)
    assert top_words(m, 0, n=10) == ["a", "b", "c"]
    with pytest.raises(BadTopicIndex):
        top_words(m, 1)
    assert model_dump(m, 2).splitlines()[:2] == ["topic 0", f"  a\t{m.beta[0, 0]!r}"]


def test_fit_errors():
    with pytest.raises(EmptyCorpus):
        fit_lda([], k=1)
    with pytest.raises(EmptyCorpus):
        fit_lda([[], []], k=1)
    with pytest.raises(KTooLarge):
        fit_lda([["a", "b"]], k=3)


def _corpus():
    rng = np.random.default_rng(3)
    arts = []
    for day in range(20):
        d = D(2016, 6, 14) + dt.timedelta(days=day)
        for _ in range(3):
            toks = tuple(str(w) for w in rng.choice(VOCAB_A[:8], 12)) + ("referendum",) * 3
            arts.append(Article(d, "", toks))
    return arts


def test_window_documents_calendar_days():
    corpus = _corpus()
    docs = window_documents(corpus, D(2016, 6, 24), 5)
    assert len(docs) == 33
    assert window_documents(corpus, D(2016, 1, 1), 5) == []


def test_event_window_topics_single_article_clamps_k():
    corpus = [Article(D(2016, 6, 24), "", ("vote", "leave", "vote"))]
    model, words = event_window_topics(corpus, D(2016, 6, 25), k=5, iterations=10)
    assert model.k == 1
    assert words == {"vote", "leave"}
    with pytest.raises(NoDocumentsInWindow):
        event_window_topics(corpus, D(2017, 1, 1))


def test_tracked_timeline_rows():
    corpus = _corpus()
    events = [D(2016, 6, 24), D(2016, 6, 20), D(2018, 1, 1)]
    tl = tracked_word_timeline(corpus, events, tracked=("referendum", "delay"), k=2, iterations=30)
    assert tl.event_dates == (D(2016, 6, 20), D(2016, 6, 24), D(2018, 1, 1))
    assert tl.present[:, 1].tolist() == [False, False, False]
    assert tl.present[:2, 0].tolist() == [True, True]
    assert isinstance(tl.errors[D(2018, 1, 1)], NoDocumentsInWindow)
    rows = list(timeline_rows(tl))
    assert rows[0] == ["event_date", "word", "present"]
    assert rows[1] == ["2016-06-20", "referendum", "true"]
    assert len(rows) == 1 + 3 * 2
    assert tracked_word_timeline(corpus, events, ("referendum", "delay"), k=2, iterations=30,
                                 parallel=3).present.tolist() == tl.present.tolist()


def test_timeline_union_is_all_true():
    corpus = _corpus()
    _, words = event_window_topics(corpus, D(2016, 6, 24), k=2, iterations=30,
                                   seed=event_seed(0, D(2016, 6, 24)))
    tl = tracked_word_timeline(corpus, [D(2016, 6, 24)], tracked=sorted(words), k=2, iterations=30)
    assert tl.present.all()


def test_event_seed_stable():
    assert event_seed(0, D(2016, 6, 24)) == event_seed(0, D(2016, 6, 24))
    assert event_seed(0, D(2016, 6, 24)) != event_seed(1, D(2016, 6, 24))


def test_shipped_corpus_qualitative():
    from eventlens import data_path
    from eventlens.corpus import load_news_csv, load_stopwords

    arts = load_news_csv(data_path("news_fixture.csv"), load_stopwords(data_path("stopwords_en.txt")),
                         ["Independent journalism costs money"])
    tl = tracked_word_timeline(arts, [D(2016, 6, 24), D(2019, 3, 20)], tracked=("referendum", "delay"),
                               iterations=200)
    # referendum early, delay late
    assert tl.present.tolist() == [[True, False], [False, True]]
