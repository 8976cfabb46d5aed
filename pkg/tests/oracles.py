"""Brute-force reimplementations used as independent oracles.

Everything here recomputes its quantity straight from the metric
definitions with plain Python loops and dicts, sharing no code (and no
numpy) with the package under test. Sums deliberately run over all N
documents, including zero contributions, so the package's sparse
shortcuts are genuinely cross-checked.
"""

import math

METRIC_NAMES = (
    "baseline-idf",
    "corpus-tf",
    "logged-tf",
    "doc-tf",
    "doc-term-counts",
    "doc-max-freq",
    "doc-max-freq-minus-avg",
    "corpus-max-freq",
    "corpus-max-freq-minus-avg",
    "tf-idf-sum",
    "logged-idf",
)


def _combined_docs(high, low):
    return list(high) + list(low)


def raw_counts(high, low):
    """Per-term counts as {term: {doc_id: count}} plus combined doc order."""
    tf = {}
    doc_ids = []
    for doc in _combined_docs(high, low):
        doc_ids.append(doc.id)
        for token in doc.tokens:
            tf.setdefault(token, {})
            tf[token][doc.id] = tf[token].get(doc.id, 0) + 1
    return doc_ids, tf


def brute_force_weight(metric_name, term, high, low):
    """One term's global weight, computed definitionally over all documents."""
    doc_ids, tf = raw_counts(high, low)
    n = len(doc_ids)
    row = tf.get(term, {})
    tf_ij = [row.get(doc_id, 0) for doc_id in doc_ids]

    totals = []
    peaks = []
    for doc in _combined_docs(high, low):
        counts = {}
        for token in doc.tokens:
            counts[token] = counts.get(token, 0) + 1
        totals.append(sum(counts.values()))
        peaks.append(max(counts.values()) if counts else 0)
    corpus_peak = max(peaks) if peaks else 0
    df = sum(1 for c in tf_ij if c > 0)
    total = sum(tf_ij)

    if metric_name == "corpus-tf":
        return float(total)
    if metric_name == "logged-tf":
        return sum(math.log(c + 1.0) for c in tf_ij)
    if metric_name == "doc-tf":
        return float(max(tf_ij)) if tf_ij else 0.0
    if metric_name == "doc-term-counts":
        return sum(c / t for c, t in zip(tf_ij, totals) if t > 0)
    if metric_name == "doc-max-freq":
        return sum(c / p for c, p in zip(tf_ij, peaks) if p > 0)
    if metric_name == "doc-max-freq-minus-avg":
        return sum(c / p for c, p in zip(tf_ij, peaks) if p > 0) - total / n
    if metric_name == "corpus-max-freq":
        return total / corpus_peak if corpus_peak else 0.0
    if metric_name == "corpus-max-freq-minus-avg":
        return (total / corpus_peak if corpus_peak else 0.0) - total / n
    if metric_name == "tf-idf-sum":
        return total * n / df
    if metric_name == "logged-idf":
        return total * math.log(n / df)
    if metric_name == "baseline-idf":
        return math.log2(n / df)
    raise ValueError(f"unknown metric {metric_name!r}")


def brute_force_vector(tokens, weight_by_term):
    """tf-times-global-weight document vector as a plain dict."""
    counts = {}
    for token in tokens:
        counts[token] = counts.get(token, 0) + 1
    return {term: count * weight_by_term[term] for term, count in counts.items()}


def brute_force_cosine(weights_a, weights_b):
    dot = 0.0
    for term, value in weights_a.items():
        dot += value * weights_b.get(term, 0.0)
    norm_a = math.sqrt(sum(v * v for v in weights_a.values()))
    norm_b = math.sqrt(sum(v * v for v in weights_b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)
