import numpy as np
import pytest

from tracelink.corpus import AnswerSet, ArtifactDoc, ArtifactSet, Level

# Worked three-document corpus used across the suite:
#   H1: sensor data | L1: sensor sensor log | L2: data log


@pytest.fixture
def e1_high():
    doc = ArtifactDoc(id="H1", level=Level.HIGH, raw_text="sensor data", tokens=("sensor", "data"))
    return ArtifactSet(level=Level.HIGH, docs=(doc,))


@pytest.fixture
def e1_low():
    l1 = ArtifactDoc(
        id="L1", level=Level.LOW, raw_text="sensor sensor log", tokens=("sensor", "sensor", "log")
    )
    l2 = ArtifactDoc(id="L2", level=Level.LOW, raw_text="data log", tokens=("data", "log"))
    return ArtifactSet(level=Level.LOW, docs=(l1, l2))


@pytest.fixture
def e1_answers():
    return AnswerSet(true_links=frozenset({("H1", "L1")}))


@pytest.fixture
def rng():
    return np.random.default_rng(8141)
