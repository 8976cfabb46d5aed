import numpy as np
import pytest

from corpusgen import make_random_corpus
from oracles import METRIC_NAMES, brute_force_weight
from tracelink.corpus import ArtifactDoc, ArtifactSet, Level
from tracelink.preprocess import Vocabulary, build_vocabulary
from tracelink.weighting import (
    SIGNED_METRICS,
    MetricId,
    global_weight,
    metric_from_cli_name,
    term_document_stats,
)


@pytest.fixture
def e1_stats(e1_high, e1_low):
    vocab = build_vocabulary(e1_high, e1_low)
    return term_document_stats(e1_high, e1_low, vocab)


def weight_by_term(metric, stats):
    gw = global_weight(metric, stats)
    return dict(zip(stats.vocab.terms, gw.g))


class TestTermDocumentStats:
    def test_counts(self, e1_stats):
        vocab = e1_stats.vocab
        assert vocab.terms == ("sensor", "data", "log")
        assert e1_stats.doc_ids == ("H1", "L1", "L2")
        sensor = vocab.index["sensor"]
        assert e1_stats.tf[sensor, 0] == 1
        assert e1_stats.tf[sensor, 1] == 2
        assert e1_stats.tf[sensor, 2] == 0
        assert list(e1_stats.doc_term_count) == [2, 3, 2]

    def test_maxima_and_frequencies(self, e1_stats):
        assert list(e1_stats.doc_max_freq) == [1, 2, 1]
        assert e1_stats.corpus_max_freq == 2
        assert list(e1_stats.doc_freq) == [2, 2, 2]
        assert e1_stats.corpus_size == 3

    def test_unknown_token_aborts(self, e1_high, e1_low):
        vocab = Vocabulary(["sensor"])  # missing data/log
        with pytest.raises(LookupError, match="not in the vocabulary"):
            term_document_stats(e1_high, e1_low, vocab)

    def test_invariants_on_random_corpus(self, rng):
        high, low = make_random_corpus(rng)
        stats = term_document_stats(high, low, build_vocabulary(high, low))
        dense = stats.tf.toarray()
        assert (dense.sum(axis=0) == stats.doc_term_count).all()
        assert (dense.max(axis=0, initial=0) == stats.doc_max_freq).all()
        assert stats.corpus_max_freq == (dense.max(initial=0))
        assert ((stats.doc_freq >= 1) & (stats.doc_freq <= stats.corpus_size)).all()


class TestGlobalWeight:
    def test_corpus_tf(self, e1_stats):
        assert weight_by_term(MetricId.CORPUS_TF, e1_stats) == {
            "sensor": 3.0,
            "data": 2.0,
            "log": 2.0,
        }

    def test_doc_term_counts(self, e1_stats):
        g = weight_by_term(MetricId.DOC_TERM_COUNTS, e1_stats)
        assert g["sensor"] == pytest.approx(1 / 2 + 2 / 3)
        assert g["data"] == pytest.approx(1.0)
        assert g["log"] == pytest.approx(5 / 6)

    def test_doc_max_freq_minus_avg(self, e1_stats):
        g = weight_by_term(MetricId.DOC_MAX_FREQ_MINUS_AVG, e1_stats)
        assert g["sensor"] == pytest.approx(1.0)
        assert g["data"] == pytest.approx(2.0 - 2 / 3)
        assert g["log"] == pytest.approx(1.5 - 2 / 3)

    def test_tf_idf_sum(self, e1_stats):
        g = weight_by_term(MetricId.TF_IDF_SUM, e1_stats)
        assert g == {"sensor": 4.5, "data": 3.0, "log": 3.0}

    def test_logged_idf_zero_for_ubiquitous_term(self):
        # a term present in every document gets ln(N/n_i) = ln(1) = 0
        high = ArtifactSet(
            level=Level.HIGH,
            docs=(ArtifactDoc(id="H1", level=Level.HIGH, raw_text="", tokens=("log", "log")),),
        )
        low = ArtifactSet(
            level=Level.LOW,
            docs=(ArtifactDoc(id="L1", level=Level.LOW, raw_text="", tokens=("log",)),),
        )
        stats = term_document_stats(high, low, build_vocabulary(high, low))
        g = weight_by_term(MetricId.LOGGED_IDF, stats)
        assert g["log"] == 0.0

    def test_baseline_idf(self, e1_stats):
        g = weight_by_term(MetricId.BASELINE_IDF, e1_stats)
        for term in ("sensor", "data", "log"):
            assert g[term] == pytest.approx(np.log2(3 / 2))

    def test_empty_corpus_rejected(self):
        high = ArtifactSet(level=Level.HIGH, docs=())
        low = ArtifactSet(level=Level.LOW, docs=())
        stats = term_document_stats(high, low, Vocabulary([]))
        with pytest.raises(ValueError, match="empty corpus"):
            global_weight(MetricId.CORPUS_TF, stats)

    def test_matches_brute_force_oracle(self, rng):
        for _ in range(10):
            high, low = make_random_corpus(rng)
            stats = term_document_stats(high, low, build_vocabulary(high, low))
            for name in METRIC_NAMES:
                metric = metric_from_cli_name(name)
                computed = weight_by_term(metric, stats)
                for term in stats.vocab.terms:
                    expected = brute_force_weight(name, term, high, low)
                    assert computed[term] == pytest.approx(expected, rel=1e-9, abs=1e-12), (
                        name,
                        term,
                    )


class TestMetricProperties:
    def test_corpus_max_freq_is_scaled_corpus_tf(self, rng):
        high, low = make_random_corpus(rng)
        stats = term_document_stats(high, low, build_vocabulary(high, low))
        if stats.corpus_max_freq == 0:
            pytest.skip("all-empty corpus drawn")
        scaled = global_weight(MetricId.CORPUS_TF, stats).g / stats.corpus_max_freq
        assert (global_weight(MetricId.CORPUS_MAX_FREQ, stats).g == scaled).all()

    def test_doc_tf_bounded_by_corpus_tf(self, rng):
        high, low = make_random_corpus(rng)
        stats = term_document_stats(high, low, build_vocabulary(high, low))
        assert (
            global_weight(MetricId.DOC_TF, stats).g
            <= global_weight(MetricId.CORPUS_TF, stats).g
        ).all()

    def test_non_negative_except_signed_metrics(self, rng):
        for _ in range(5):
            high, low = make_random_corpus(rng)
            stats = term_document_stats(high, low, build_vocabulary(high, low))
            for metric in MetricId:
                g = global_weight(metric, stats).g
                assert np.isfinite(g).all()
                if metric not in SIGNED_METRICS:
                    assert (g >= 0).all(), metric

    def test_baseline_idf_zero_iff_term_everywhere(self, rng):
        for _ in range(5):
            high, low = make_random_corpus(rng)
            stats = term_document_stats(high, low, build_vocabulary(high, low))
            g = global_weight(MetricId.BASELINE_IDF, stats).g
            everywhere = stats.doc_freq == stats.corpus_size
            assert ((g == 0) == everywhere).all()


class TestMetricNames:
    def test_cli_names_round_trip(self):
        for metric in MetricId:
            assert metric_from_cli_name(metric.value) is metric

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown metric"):
            metric_from_cli_name("tfidf")
