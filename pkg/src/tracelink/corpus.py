"""Loading and validation of artifact collections and answer sets.

Two textual collections are traced against each other: a high-level one
(requirements, acting as queries) and a low-level one (design elements,
acting as the searched collection). An answer set is the expert-built
ground truth of true (high, low) links used for evaluation.

Supported on-disk formats:

* artifact directory: one ``<id>.txt`` file per element, UTF-8;
* artifact TSV: one ``id<TAB>text`` line per element, no header;
* answer set: ``high<TAB>low`` pair lines, or grouped ``high: low low ...``
  lines (one form per file); ``#`` comments and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class CorpusError(Exception):
    """A dataset failed to load or is structurally invalid."""


class Level(str, Enum):
    HIGH = "high"
    LOW = "low"


@dataclass(frozen=True)
class ArtifactDoc:
    """One requirement or design element.

    ``tokens`` is empty until the preprocessing pipeline fills it.
    """

    id: str
    level: Level
    raw_text: str
    tokens: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("artifact id must be non-empty")
        if any(ch.isspace() for ch in self.id):
            raise ValueError(f"artifact id contains whitespace: {self.id!r}")


@dataclass(frozen=True)
class ArtifactSet:
    """An ordered collection of artifacts sharing one level."""

    level: Level
    docs: tuple[ArtifactDoc, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for doc in self.docs:
            if doc.level is not self.level:
                raise ValueError(
                    f"doc {doc.id!r} has level {doc.level.value}, set is {self.level.value}"
                )
            if doc.id in seen:
                raise ValueError(f"duplicate artifact id: {doc.id!r}")
            seen.add(doc.id)

    def __len__(self) -> int:
        return len(self.docs)

    def __iter__(self):
        return iter(self.docs)

    def ids(self) -> tuple[str, ...]:
        return tuple(doc.id for doc in self.docs)


@dataclass(frozen=True)
class AnswerSet:
    """Ground-truth set of true (high_id, low_id) links."""

    true_links: frozenset[tuple[str, str]]

    def __len__(self) -> int:
        return len(self.true_links)


@dataclass(frozen=True)
class DatasetManifest:
    """Validation record for a loaded dataset."""

    high_count: int
    low_count: int
    true_link_count: int
    unresolved_answer_ids: tuple[str, ...] = field(default=())


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8 ({exc})") from None


def load_artifacts(path: str | Path, level: Level) -> ArtifactSet:
    """Load an artifact collection from a directory of ``*.txt`` files or a TSV file.

    Directory mode uses the file name without extension as the id; TSV mode
    takes the id from the first column. Docs are returned sorted by id
    (byte order) with empty token lists.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"artifact path does not exist: {path}")

    docs: list[ArtifactDoc] = []
    if path.is_dir():
        for entry in sorted(path.glob("*.txt")):
            docs.append(ArtifactDoc(id=entry.stem, level=level, raw_text=_read_text(entry)))
    else:
        seen: set[str] = set()
        for lineno, line in enumerate(_read_text(path).split("\n"), start=1):
            if not line.strip():
                continue
            doc_id, sep, text = line.partition("\t")
            if not sep:
                raise CorpusError(f"{path}:{lineno}: expected 'id<TAB>text', got {line!r}")
            doc_id = doc_id.strip()
            if doc_id in seen:
                raise CorpusError(f"{path}:{lineno}: duplicate artifact id {doc_id!r}")
            seen.add(doc_id)
            docs.append(ArtifactDoc(id=doc_id, level=level, raw_text=text))

    if not docs:
        raise CorpusError(f"empty artifact collection: {path}")
    docs.sort(key=lambda d: d.id)
    return ArtifactSet(level=level, docs=tuple(docs))


def load_answer_set(path: str | Path) -> AnswerSet:
    """Parse an answer-set file into a deduplicated set of (high, low) pairs.

    A file must stick to one of the two line forms; mixing pair lines and
    grouped lines is an error.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"answer set does not exist: {path}")

    pairs: set[tuple[str, str]] = set()
    form_seen: str | None = None
    for lineno, raw in enumerate(_read_text(path).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" in raw:
            form = "pair"
            fields = [f.strip() for f in raw.split("\t")]
            if len(fields) != 2 or not all(fields):
                raise CorpusError(f"{path}:{lineno}: expected 'high<TAB>low', got {raw!r}")
            pairs.add((fields[0], fields[1]))
        elif ":" in line:
            form = "grouped"
            high, _, rest = line.partition(":")
            high = high.strip()
            lows = rest.split()
            if not high or not lows:
                raise CorpusError(f"{path}:{lineno}: expected 'high: low low ...', got {raw!r}")
            pairs.update((high, low) for low in lows)
        else:
            raise CorpusError(f"{path}:{lineno}: unrecognized answer line {raw!r}")
        if form_seen is None:
            form_seen = form
        elif form_seen != form:
            raise CorpusError(f"{path}:{lineno}: mixed pair and grouped forms in one file")

    if not pairs:
        raise CorpusError(f"answer set contains no pairs: {path}")
    return AnswerSet(true_links=frozenset(pairs))


def validate_dataset(high: ArtifactSet, low: ArtifactSet, answers: AnswerSet) -> DatasetManifest:
    """Cross-check answer ids against the loaded collections.

    Answer pairs referencing unknown ids are flagged (the ids are listed),
    never dropped: they still count toward the recall denominator.
    """
    high_ids = set(high.ids())
    low_ids = set(low.ids())
    unresolved: set[str] = set()
    for high_id, low_id in answers.true_links:
        if high_id not in high_ids:
            unresolved.add(high_id)
        if low_id not in low_ids:
            unresolved.add(low_id)
    return DatasetManifest(
        high_count=len(high),
        low_count=len(low),
        true_link_count=len(answers),
        unresolved_answer_ids=tuple(sorted(unresolved)),
    )
