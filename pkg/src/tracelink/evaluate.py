"""Recall/precision scoring against an answer set, plus the trace-coverage report.

Recall is the fraction of true links that were retrieved; precision is
the fraction of retrieved links that are true. Both are kept at full
precision and rounded to one decimal only for display. An empty retrieval
has precision 0.0 by convention so sweep tables stay total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import AnswerSet, ArtifactSet
from .retrieval import CandidateLinkList


@dataclass(frozen=True)
class EvalResult:
    relevant_retrieved: int
    retrieved: int
    relevant_total: int
    recall_pct: float
    precision_pct: float


@dataclass(frozen=True)
class TraceReport:
    """High ids with no retained links, and low ids with no retained links."""

    childless_high: tuple[str, ...]
    orphan_low: tuple[str, ...]


def evaluate_links(links: CandidateLinkList, answers: AnswerSet) -> EvalResult:
    """Score retrieved pairs against the answer set (set semantics over pairs)."""
    if not answers.true_links:
        raise ValueError("cannot evaluate against an empty answer set")
    retrieved_pairs = links.pairs()
    relevant_retrieved = len(retrieved_pairs & answers.true_links)
    retrieved = len(retrieved_pairs)
    relevant_total = len(answers.true_links)
    recall_pct = 100.0 * relevant_retrieved / relevant_total
    precision_pct = 100.0 * relevant_retrieved / retrieved if retrieved else 0.0
    return EvalResult(
        relevant_retrieved=relevant_retrieved,
        retrieved=retrieved,
        relevant_total=relevant_total,
        recall_pct=recall_pct,
        precision_pct=precision_pct,
    )


def traceability_analysis(
    links: CandidateLinkList, high: ArtifactSet, low: ArtifactSet
) -> TraceReport:
    """List the high ids left childless and the low ids left orphaned by a filtered list."""
    linked_high = {link.high_id for link in links.links}
    linked_low = {link.low_id for link in links.links}
    return TraceReport(
        childless_high=tuple(sorted(set(high.ids()) - linked_high)),
        orphan_low=tuple(sorted(set(low.ids()) - linked_low)),
    )


def eval_report_dict(
    result: EvalResult, metric: str | None = None, filter_threshold: float | None = None
) -> dict:
    """JSON-ready evaluation report."""
    return {
        "metric": metric,
        "filter": filter_threshold,
        "relevant_retrieved": result.relevant_retrieved,
        "retrieved": result.retrieved,
        "relevant_total": result.relevant_total,
        "recall_pct": result.recall_pct,
        "precision_pct": result.precision_pct,
    }


def format_trace_report(report: TraceReport) -> str:
    lines = ["CHILDLESS HIGH:"]
    lines.extend(report.childless_high)
    lines.append("ORPHAN LOW:")
    lines.extend(report.orphan_low)
    return "\n".join(lines) + "\n"
