"""Vector construction, cosine scoring, candidate link generation and filtering.

A document's vector entry for term i is its raw count of i times the
term's corpus-level weight; with the baseline idf metric this is the
classic tf-idf vector. High-level docs act as queries against the
low-level collection, every pair in the M x N grid is scored, and a
threshold filter keeps links scoring strictly above it.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import sparse

from ._kernels import cosine_grid
from .corpus import ArtifactDoc, ArtifactSet
from .weighting import GlobalWeights, MetricId

UNFILTERED = float("-inf")

RTM_HEADER = "high_id\tlow_id\tsimilarity"


@dataclass(frozen=True)
class DocVector:
    """Sparse per-term weights for one document; absent terms are zero."""

    doc_id: str
    weights: dict[str, float]


@dataclass(frozen=True)
class CandidateLink:
    high_id: str
    low_id: str
    similarity: float


@dataclass(frozen=True)
class CandidateLinkList:
    """Ordered candidate links: grouped by query, best-scoring first.

    ``filter`` is the threshold already applied; -inf marks an unfiltered
    list straight out of link generation.
    """

    metric: MetricId
    filter: float
    links: tuple[CandidateLink, ...]

    def __len__(self) -> int:
        return len(self.links)

    def pairs(self) -> set[tuple[str, str]]:
        return {(link.high_id, link.low_id) for link in self.links}


def build_vector(doc: ArtifactDoc, gw: GlobalWeights) -> DocVector:
    """Weight a preprocessed doc: entry for term i = raw count of i times g_i."""
    counts = Counter(doc.tokens)
    index = gw.vocab.index
    weights: dict[str, float] = {}
    for term, count in counts.items():
        pos = index.get(term)
        if pos is None:
            raise LookupError(f"token {term!r} in doc {doc.id!r} is not in the vocabulary")
        weights[term] = count * float(gw.g[pos])
    return DocVector(doc_id=doc.id, weights=weights)


def cosine_similarity(a: DocVector, b: DocVector) -> float:
    """Cosine of the angle between two vectors; 0 when either norm is zero.

    The shared terms are accumulated in sorted order so the result is
    exactly symmetric in its arguments.
    """
    norm_a = math.sqrt(sum(w * w for w in a.weights.values()))
    norm_b = math.sqrt(sum(w * w for w in b.weights.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    shared = sorted(a.weights.keys() & b.weights.keys())
    dot = sum(a.weights[t] * b.weights[t] for t in shared)
    return dot / (norm_a * norm_b)


def weighted_matrix(artifact_set: ArtifactSet, gw: GlobalWeights) -> sparse.csr_matrix:
    """Stack the set's weighted vectors as CSR rows in set order."""
    index = gw.vocab.index
    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for doc in artifact_set:
        counts = Counter(doc.tokens)
        entries = []
        for term, count in counts.items():
            pos = index.get(term)
            if pos is None:
                raise LookupError(f"token {term!r} in doc {doc.id!r} is not in the vocabulary")
            entries.append((pos, count * float(gw.g[pos])))
        entries.sort()
        for pos, weight in entries:
            indices.append(pos)
            data.append(weight)
        indptr.append(len(indices))
    return sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int32), indptr),
        shape=(len(artifact_set), len(gw.vocab)),
    )


def generate_links(high: ArtifactSet, low: ArtifactSet, gw: GlobalWeights) -> CandidateLinkList:
    """Score the full M x N grid and keep every pair with nonzero similarity.

    Within each high id, links come out sorted by similarity descending
    with ties broken by low id ascending; no threshold is applied yet.
    """
    grid = cosine_grid(weighted_matrix(high, gw), weighted_matrix(low, gw))
    low_ids = low.ids()
    links: list[CandidateLink] = []
    for row, high_doc in enumerate(high):
        scored = [
            (float(grid[row, col]), low_ids[col])
            for col in np.flatnonzero(grid[row] != 0.0)
        ]
        scored.sort(key=lambda pair: (-pair[0], pair[1]))
        links.extend(
            CandidateLink(
                high_id=high_doc.id,
                low_id=low_id,
                similarity=min(1.0, max(-1.0, similarity)),
            )
            for similarity, low_id in scored
        )
    return CandidateLinkList(metric=gw.metric, filter=UNFILTERED, links=tuple(links))


def apply_filter(links: CandidateLinkList, threshold: float) -> CandidateLinkList:
    """Keep links scoring strictly above the threshold, preserving order."""
    if not math.isfinite(threshold):
        raise ValueError(f"filter threshold must be finite, got {threshold!r}")
    kept = tuple(link for link in links.links if link.similarity > threshold)
    return CandidateLinkList(metric=links.metric, filter=threshold, links=kept)


def write_rtm(links: CandidateLinkList, path: str | Path) -> None:
    """Write the links as the traceability-matrix TSV (similarity at 6 decimals)."""
    path = Path(path)
    lines = [RTM_HEADER]
    lines.extend(
        f"{link.high_id}\t{link.low_id}\t{link.similarity:.6f}" for link in links.links
    )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_rtm(path: str | Path) -> list[CandidateLink]:
    """Parse an RTM TSV back into links; malformed rows report their line number."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").split("\n")
    if not lines or lines[0] != RTM_HEADER:
        raise ValueError(f"{path}:1: missing RTM header {RTM_HEADER!r}")
    links = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields, got {line!r}")
        try:
            similarity = float(fields[2])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad similarity value {fields[2]!r}") from None
        links.append(CandidateLink(high_id=fields[0], low_id=fields[1], similarity=similarity))
    return links
