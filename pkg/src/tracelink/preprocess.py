"""Text preprocessing: tokenize, drop stop words, stem, build the shared vocabulary.

Every document from both levels runs through the same pipeline
(lowercase split -> stop-word removal -> stemming) and all resulting
stems are pooled into one common vocabulary without repetition, ordered
by first appearance (high-level set first).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

from .corpus import ArtifactSet, CorpusError
from .porter import porter_stem

logger = logging.getLogger(__name__)

_WORD_RE = re.compile(r"[a-z]+")

# Fixed default stop list (classic short list of English function words).
# Deliberately versioned with the package: changing it changes results.
# Override per run with a stop-list file.
DEFAULT_STOP_WORDS = frozenset(
    """
    a about above after again against all am an and any are as at
    be because been before being below between both but by
    can cannot could did do does doing down during
    each few for from further
    had has have having he her here hers him his how
    i if in into is it its itself
    just
    may might more most must my
    no nor not
    of off on once only or other our ours out over own
    same shall she should so some such
    than that the their theirs them then there these they this those through to too
    under until up upon
    very
    was we were what when where which while who whom why will with would
    you your yours
    """.split()
)


@dataclass(frozen=True)
class StopList:
    """A set of lowercase words to drop during preprocessing."""

    words: frozenset[str]

    def __post_init__(self) -> None:
        for word in self.words:
            if word != word.lower() or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid stop word: {word!r}")

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


def default_stop_list() -> StopList:
    return StopList(words=DEFAULT_STOP_WORDS)


def load_stop_list(path: str | Path) -> StopList:
    """Read a stop list file: one word per line, ``#`` comments, blanks ignored."""
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"stop list does not exist: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8 ({exc})") from None
    words: set[str] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if any(ch.isspace() for ch in line):
            raise CorpusError(f"{path}:{lineno}: one word per line, got {raw!r}")
        words.add(line.lower())
    return StopList(words=frozenset(words))


class Vocabulary:
    """Ordered, duplicate-free universe of processed terms from both levels.

    ``index`` maps each term to its position; every weight and document
    vector in the pipeline is aligned with this order.
    """

    __slots__ = ("terms", "index")

    def __init__(self, terms: Iterable[str]):
        self.terms: tuple[str, ...] = tuple(terms)
        self.index: dict[str, int] = {}
        for pos, term in enumerate(self.terms):
            if term in self.index:
                raise ValueError(f"duplicate vocabulary term: {term!r}")
            self.index[term] = pos

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocabulary) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Vocabulary({len(self.terms)} terms)"


def tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphabetic characters.

    Fragments shorter than two letters are dropped; digits and punctuation
    act as separators, so no surviving token contains them.
    """
    return [w for w in _WORD_RE.findall(text.lower()) if len(w) >= 2]


def remove_stop_words(tokens: list[str], stop: StopList) -> list[str]:
    """Drop exactly the tokens present in the stop list, preserving order."""
    return [t for t in tokens if t not in stop]


def process_text(text: str, stop: StopList, stem: bool = True) -> list[str]:
    """Run one document's text through the full token pipeline."""
    tokens = remove_stop_words(tokenize(text), stop)
    if stem:
        tokens = [porter_stem(t) for t in tokens]
    return tokens


def build_vocabulary(high: ArtifactSet, low: ArtifactSet) -> Vocabulary:
    """Collect unique terms from both token streams in first-appearance order."""
    seen: dict[str, None] = {}
    for artifact_set in (high, low):
        for doc in artifact_set:
            for token in doc.tokens:
                seen.setdefault(token, None)
    return Vocabulary(seen.keys())


def preprocess_corpus(
    high: ArtifactSet,
    low: ArtifactSet,
    stop: StopList,
    stem: bool = True,
) -> tuple[ArtifactSet, ArtifactSet, Vocabulary]:
    """Fill every doc's tokens and build the common vocabulary.

    Docs whose token list comes out empty are kept (they still count toward
    the corpus size and become zero vectors); each one is reported at
    warning level.
    """

    def process_set(artifact_set: ArtifactSet) -> ArtifactSet:
        processed = []
        for doc in artifact_set:
            tokens = tuple(process_text(doc.raw_text, stop, stem=stem))
            if not tokens and doc.raw_text.strip():
                logger.warning("doc %s: no tokens survive preprocessing, kept as zero vector", doc.id)
            processed.append(replace(doc, tokens=tokens))
        return ArtifactSet(level=artifact_set.level, docs=tuple(processed))

    high_processed = process_set(high)
    low_processed = process_set(low)
    return high_processed, low_processed, build_vocabulary(high_processed, low_processed)
