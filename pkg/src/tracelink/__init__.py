"""Trace-link recovery between high- and low-level textual software artifacts.

Pipeline: load artifact collections, preprocess (tokenize, stop words,
stemming), weight terms with one of eleven corpus-level metrics, score
every high/low pair by cosine similarity, filter by threshold, and
evaluate recall/precision against an expert answer set.
"""

from .corpus import (
    AnswerSet,
    ArtifactDoc,
    ArtifactSet,
    CorpusError,
    DatasetManifest,
    Level,
    load_answer_set,
    load_artifacts,
    validate_dataset,
)
from .evaluate import (
    EvalResult,
    TraceReport,
    evaluate_links,
    traceability_analysis,
)
from .porter import PorterStemmer, porter_stem
from .preprocess import (
    DEFAULT_STOP_WORDS,
    StopList,
    Vocabulary,
    build_vocabulary,
    default_stop_list,
    load_stop_list,
    preprocess_corpus,
    remove_stop_words,
    tokenize,
)
from .retrieval import (
    CandidateLink,
    CandidateLinkList,
    DocVector,
    apply_filter,
    build_vector,
    cosine_similarity,
    generate_links,
    read_rtm,
    write_rtm,
)
from .weighting import (
    GlobalWeights,
    MetricId,
    TermDocStats,
    global_weight,
    term_document_stats,
)

__version__ = "0.1.0"

__all__ = [
    "AnswerSet",
    "ArtifactDoc",
    "ArtifactSet",
    "CandidateLink",
    "CandidateLinkList",
    "CorpusError",
    "DatasetManifest",
    "DocVector",
    "DEFAULT_STOP_WORDS",
    "EvalResult",
    "GlobalWeights",
    "Level",
    "MetricId",
    "PorterStemmer",
    "StopList",
    "TermDocStats",
    "TraceReport",
    "Vocabulary",
    "apply_filter",
    "build_vector",
    "build_vocabulary",
    "cosine_similarity",
    "default_stop_list",
    "evaluate_links",
    "generate_links",
    "global_weight",
    "load_answer_set",
    "load_artifacts",
    "load_stop_list",
    "porter_stem",
    "preprocess_corpus",
    "read_rtm",
    "remove_stop_words",
    "term_document_stats",
    "tokenize",
    "traceability_analysis",
    "validate_dataset",
    "write_rtm",
]
