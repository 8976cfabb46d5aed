"""Term-document statistics and the eleven global term-weighting metrics.

All statistics are taken over the combined high+low corpus: the corpus
size N counts documents from both levels, and a term's document frequency
counts containing documents from both levels. Each metric turns those
statistics into one corpus-level weight per vocabulary term; the
per-document local factor (raw term frequency) is applied later when
vectors are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import sparse

from .corpus import ArtifactSet
from .preprocess import Vocabulary


class MetricId(Enum):
    """Closed set of weighting schemes; the value is the CLI name."""

    BASELINE_IDF = "baseline-idf"
    CORPUS_TF = "corpus-tf"
    LOGGED_TF = "logged-tf"
    DOC_TF = "doc-tf"
    DOC_TERM_COUNTS = "doc-term-counts"
    DOC_MAX_FREQ = "doc-max-freq"
    DOC_MAX_FREQ_MINUS_AVG = "doc-max-freq-minus-avg"
    CORPUS_MAX_FREQ = "corpus-max-freq"
    CORPUS_MAX_FREQ_MINUS_AVG = "corpus-max-freq-minus-avg"
    TF_IDF_SUM = "tf-idf-sum"
    LOGGED_IDF = "logged-idf"


DISPLAY_NAMES: dict[MetricId, str] = {
    MetricId.BASELINE_IDF: "TF-IDF (baseline)",
    MetricId.CORPUS_TF: "Corpus Term Frequency",
    MetricId.LOGGED_TF: "Logged Term Frequency",
    MetricId.DOC_TF: "Document Term Frequency",
    MetricId.DOC_TERM_COUNTS: "Document Terms Counts",
    MetricId.DOC_MAX_FREQ: "Document Maximum Frequency",
    MetricId.DOC_MAX_FREQ_MINUS_AVG: "Document Maximum Frequency and Term Average Frequency",
    MetricId.CORPUS_MAX_FREQ: "Corpus Maximum Frequency",
    MetricId.CORPUS_MAX_FREQ_MINUS_AVG: "Corpus Maximum Frequency and Term Average Frequency",
    MetricId.TF_IDF_SUM: "Term Frequency-Inverse Document Frequency",
    MetricId.LOGGED_IDF: "Logged Inverse Document Frequency",
}

# Metrics that may legitimately produce negative weights.
SIGNED_METRICS = frozenset({MetricId.DOC_MAX_FREQ_MINUS_AVG, MetricId.CORPUS_MAX_FREQ_MINUS_AVG})


@dataclass(frozen=True)
class TermDocStats:
    """Sparse term-document counts plus the derived corpus statistics.

    ``tf`` is terms x documents (vocabulary order x combined doc order,
    high set first). Absent entries mean zero.
    """

    tf: sparse.csr_matrix
    vocab: Vocabulary
    doc_ids: tuple[str, ...]
    doc_term_count: np.ndarray  # total tokens per document
    doc_max_freq: np.ndarray  # highest single-term count per document
    corpus_max_freq: int  # highest count anywhere in the corpus
    doc_freq: np.ndarray  # documents containing each term
    corpus_size: int  # N, documents across both levels


@dataclass(frozen=True)
class GlobalWeights:
    """Per-term corpus-level weights produced by one metric."""

    metric: MetricId
    g: np.ndarray
    vocab: Vocabulary


def term_document_stats(high: ArtifactSet, low: ArtifactSet, vocab: Vocabulary) -> TermDocStats:
    """Count term occurrences over the combined corpus (high docs first)."""
    docs = list(high) + list(low)
    n_terms = len(vocab)
    n_docs = len(docs)

    rows: list[int] = []
    cols: list[int] = []
    vals: list[int] = []
    for col, doc in enumerate(docs):
        counts: dict[int, int] = {}
        for token in doc.tokens:
            term_row = vocab.index.get(token)
            if term_row is None:
                raise LookupError(f"token {token!r} in doc {doc.id!r} is not in the vocabulary")
            counts[term_row] = counts.get(term_row, 0) + 1
        for term_row, count in counts.items():
            rows.append(term_row)
            cols.append(col)
            vals.append(count)

    tf = sparse.csr_matrix(
        (np.asarray(vals, dtype=np.int64), (rows, cols)), shape=(n_terms, n_docs)
    )
    tf.sum_duplicates()
    tf.sort_indices()

    doc_term_count = np.asarray(tf.sum(axis=0)).ravel().astype(np.int64)
    if tf.nnz:
        doc_max_freq = tf.max(axis=0).toarray().ravel().astype(np.int64)
        corpus_max_freq = int(tf.data.max())
    else:
        doc_max_freq = np.zeros(n_docs, dtype=np.int64)
        corpus_max_freq = 0
    doc_freq = np.diff(tf.indptr).astype(np.int64)

    return TermDocStats(
        tf=tf,
        vocab=vocab,
        doc_ids=tuple(doc.id for doc in docs),
        doc_term_count=doc_term_count,
        doc_max_freq=doc_max_freq,
        corpus_max_freq=corpus_max_freq,
        doc_freq=doc_freq,
        corpus_size=n_docs,
    )


def _column_scaled_row_sums(tf: sparse.csr_matrix, denom: np.ndarray) -> np.ndarray:
    """Row sums of tf with each entry divided by its column's denominator.

    Columns with a zero denominator (empty documents) contribute nothing;
    they hold no entries anyway.
    """
    inv = np.zeros_like(denom, dtype=np.float64)
    np.divide(1.0, denom, out=inv, where=denom > 0)
    scaled = tf.astype(np.float64)
    scaled.data *= inv[scaled.indices]
    return np.asarray(scaled.sum(axis=1)).ravel()


def global_weight(metric: MetricId, stats: TermDocStats) -> GlobalWeights:
    """Compute one metric's per-term weight vector from the corpus statistics."""
    n_docs = stats.corpus_size
    if n_docs == 0:
        raise ValueError("cannot weight an empty corpus (no documents)")

    tf = stats.tf
    row_sum = np.asarray(tf.sum(axis=1)).ravel().astype(np.float64)

    if metric is MetricId.CORPUS_TF:
        g = row_sum
    elif metric is MetricId.LOGGED_TF:
        logged = tf.astype(np.float64)
        logged.data = np.log(logged.data + 1.0)
        g = np.asarray(logged.sum(axis=1)).ravel()
    elif metric is MetricId.DOC_TF:
        if tf.nnz:
            g = tf.max(axis=1).toarray().ravel().astype(np.float64)
        else:
            g = np.zeros(len(stats.vocab))
    elif metric is MetricId.DOC_TERM_COUNTS:
        g = _column_scaled_row_sums(tf, stats.doc_term_count)
    elif metric is MetricId.DOC_MAX_FREQ:
        g = _column_scaled_row_sums(tf, stats.doc_max_freq)
    elif metric is MetricId.DOC_MAX_FREQ_MINUS_AVG:
        g = _column_scaled_row_sums(tf, stats.doc_max_freq) - row_sum / n_docs
    elif metric is MetricId.CORPUS_MAX_FREQ:
        g = row_sum / stats.corpus_max_freq if stats.corpus_max_freq else np.zeros_like(row_sum)
    elif metric is MetricId.CORPUS_MAX_FREQ_MINUS_AVG:
        relativized = (
            row_sum / stats.corpus_max_freq if stats.corpus_max_freq else np.zeros_like(row_sum)
        )
        g = relativized - row_sum / n_docs
    elif metric is MetricId.TF_IDF_SUM:
        g = row_sum * (n_docs / _checked_doc_freq(stats))
    elif metric is MetricId.LOGGED_IDF:
        g = row_sum * np.log(n_docs / _checked_doc_freq(stats))
    elif metric is MetricId.BASELINE_IDF:
        g = np.log2(n_docs / _checked_doc_freq(stats))
    else:
        raise ValueError(f"unknown metric: {metric!r}")

    if not np.all(np.isfinite(g)):
        raise ValueError(f"{metric.value}: non-finite weight produced (inconsistent stats)")
    return GlobalWeights(metric=metric, g=g, vocab=stats.vocab)


def _checked_doc_freq(stats: TermDocStats) -> np.ndarray:
    if np.any(stats.doc_freq == 0):
        missing = [stats.vocab.terms[i] for i in np.flatnonzero(stats.doc_freq == 0)[:5]]
        raise ValueError(f"vocabulary terms occur in no document: {missing}")
    return stats.doc_freq.astype(np.float64)


def all_metrics() -> tuple[MetricId, ...]:
    return tuple(MetricId)


def metric_from_cli_name(name: str) -> MetricId:
    for metric in MetricId:
        if metric.value == name:
            return metric
    raise ValueError(f"unknown metric name: {name!r}")
