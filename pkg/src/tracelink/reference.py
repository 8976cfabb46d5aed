"""Published reference recall/precision for the NASA MODIS and CM-1 benchmarks.

These figures come from previously published runs of the ten statistical
weighting metrics on the two datasets (MODIS at filters 0.2/0.25, CM-1 at
0/0.05). Sweep output can print them beside freshly computed numbers for
orientation. Divergence is expected: the original preprocessing details
(stop list, tokenizer) were never published, so these are comparison
points, not assertions.
"""

from __future__ import annotations

from .weighting import MetricId

# (recall_pct, precision_pct) per metric, keyed by (dataset, filter).
REFERENCE_RESULTS: dict[tuple[str, float], dict[MetricId, tuple[float, float]]] = {
    ("modis", 0.2): {
        MetricId.CORPUS_TF: (65.8, 13.5),
        MetricId.LOGGED_TF: (65.8, 14.2),
        MetricId.DOC_TF: (24.3, 7.6),
        MetricId.DOC_TERM_COUNTS: (68.2, 17.1),
        MetricId.DOC_MAX_FREQ: (63.4, 16.5),
        MetricId.DOC_MAX_FREQ_MINUS_AVG: (65.8, 17.0),
        MetricId.CORPUS_MAX_FREQ: (65.8, 13.7),
        MetricId.CORPUS_MAX_FREQ_MINUS_AVG: (65.8, 13.4),
        MetricId.TF_IDF_SUM: (34.1, 23.7),
        MetricId.LOGGED_IDF: (65.8, 14.0),
    },
    ("modis", 0.25): {
        MetricId.CORPUS_TF: (65.8, 16.0),
        MetricId.LOGGED_TF: (63.4, 16.4),
        MetricId.DOC_TF: (17.0, 7.6),
        MetricId.DOC_TERM_COUNTS: (68.2, 19.3),
        MetricId.DOC_MAX_FREQ: (63.4, 19.5),
        MetricId.DOC_MAX_FREQ_MINUS_AVG: (63.4, 19.6),
        MetricId.CORPUS_MAX_FREQ: (65.8, 16.1),
        MetricId.CORPUS_MAX_FREQ_MINUS_AVG: (65.8, 16.0),
        MetricId.TF_IDF_SUM: (19.5, 21.6),
        MetricId.LOGGED_IDF: (65.8, 18.7),
    },
    ("cm1", 0.0): {
        MetricId.CORPUS_TF: (97.7, 1.0),
        MetricId.LOGGED_TF: (98.0, 1.0),
        MetricId.DOC_TF: (98.6, 1.0),
        MetricId.DOC_TERM_COUNTS: (97.5, 1.0),
        MetricId.DOC_MAX_FREQ: (97.5, 1.0),
        MetricId.DOC_MAX_FREQ_MINUS_AVG: (97.5, 1.0),
        MetricId.CORPUS_MAX_FREQ: (97.7, 1.0),
        MetricId.CORPUS_MAX_FREQ_MINUS_AVG: (97.5, 1.0),
        MetricId.TF_IDF_SUM: (98.6, 1.0),
        MetricId.LOGGED_IDF: (98.3, 1.0),
    },
    ("cm1", 0.05): {
        MetricId.CORPUS_TF: (86.9, 1.0),
        MetricId.LOGGED_TF: (87.5, 1.0),
        MetricId.DOC_TF: (93.0, 1.1),
        MetricId.DOC_TERM_COUNTS: (86.1, 1.0),
        MetricId.DOC_MAX_FREQ: (86.9, 1.0),
        MetricId.DOC_MAX_FREQ_MINUS_AVG: (86.9, 1.0),
        MetricId.CORPUS_MAX_FREQ: (86.9, 1.0),
        MetricId.CORPUS_MAX_FREQ_MINUS_AVG: (86.1, 1.0),
        MetricId.TF_IDF_SUM: (95.2, 1.1),
        MetricId.LOGGED_IDF: (92.7, 1.1),
    },
}

DATASETS = ("modis", "cm1")


def reference_for(dataset: str, filter_threshold: float) -> dict[MetricId, tuple[float, float]]:
    """Reference rows for one (dataset, filter) cell; empty when none were published."""
    return REFERENCE_RESULTS.get((dataset, round(filter_threshold, 6)), {})
