"""Scoring machine keyphrases against human keyphrases.

Two phrases match when their Iterated Lovins stem sequences are equal:
"neural networks" matches "neural network", but neither matches
"networks" (different length) nor "networks neural" (order matters).
Agreement over a document is summarized by confusion counts: ``a``
matches, ``b`` machine-only phrases, ``c`` human-only phrases, and an
optional ``d`` for true negatives when the candidate space is known.
Precision, recall, and the F-measure are derived from those counts; a
corpus is scored both micro (pooled counts) and macro (mean of
per-document metrics).
"""

from collections.abc import Sequence
from dataclasses import dataclass

from .stemming import stem_phrase


@dataclass(frozen=True)
class ConfusionCounts:
    a: int
    b: int
    c: int
    d: int | None = None

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            if getattr(self, name) < 0:
                raise ValueError(f"count {name} must be non-negative")
        if self.d is not None and self.d < 0:
            raise ValueError("count d must be non-negative")


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f_measure: float
    degenerate: bool = False


def match_count(machine: Sequence[str], human: Sequence[str]) -> ConfusionCounts:
    """Count stem-sequence matches between two phrase lists.

    Each human phrase can be matched by at most one machine phrase, so
    within-list duplicates that collapse to one stem sequence count once.
    Surface case and inflections that stem identically do not affect the
    result.
    """
    machine_stems = {stem_phrase(phrase) for phrase in machine}
    human_stems = {stem_phrase(phrase) for phrase in human}
    a = len(machine_stems & human_stems)
    return ConfusionCounts(a=a, b=len(machine) - a, c=len(human) - a)


def metrics_from_counts(counts: ConfusionCounts) -> Metrics:
    """Precision a/(a+b), recall a/(a+c), F 2a/(2a+b+c).

    A degenerate denominator (an empty machine or human list) yields 0
    for the affected metric and sets the ``degenerate`` flag.
    """
    a, b, c = counts.a, counts.b, counts.c
    degenerate = (a + b) == 0 or (a + c) == 0
    precision = a / (a + b) if (a + b) > 0 else 0.0
    recall = a / (a + c) if (a + c) > 0 else 0.0
    f_measure = 2 * a / (2 * a + b + c) if (2 * a + b + c) > 0 else 0.0
    return Metrics(precision, recall, f_measure, degenerate)


def accuracy(counts: ConfusionCounts) -> float:
    """(a+d) / (a+b+c+d); requires the true-negative count d."""
    if counts.d is None:
        raise ValueError("accuracy requires the true-negative count d")
    total = counts.a + counts.b + counts.c + counts.d
    if total == 0:
        raise ValueError("accuracy undefined for all-zero counts")
    return (counts.a + counts.d) / total


def class_skew(counts: ConfusionCounts) -> float:
    """(a+c) / (b+d): positive examples per negative example."""
    if counts.d is None:
        raise ValueError("class_skew requires the true-negative count d")
    negatives = counts.b + counts.d
    if negatives == 0:
        raise ValueError("class_skew undefined with no negative examples")
    return (counts.a + counts.c) / negatives


@dataclass(frozen=True)
class DocumentScore:
    counts: ConfusionCounts
    metrics: Metrics


@dataclass(frozen=True)
class CorpusScore:
    micro: Metrics
    macro: Metrics
    pooled: ConfusionCounts
    per_document: tuple[DocumentScore, ...]


def score_counts(per_document: Sequence[ConfusionCounts]) -> CorpusScore:
    """Aggregate per-document confusion counts into corpus-level metrics."""
    if not per_document:
        raise ValueError("cannot score an empty corpus")
    pooled = ConfusionCounts(
        a=sum(c.a for c in per_document),
        b=sum(c.b for c in per_document),
        c=sum(c.c for c in per_document),
    )
    scores = tuple(
        DocumentScore(counts, metrics_from_counts(counts)) for counts in per_document
    )
    n = len(scores)
    macro = Metrics(
        precision=sum(s.metrics.precision for s in scores) / n,
        recall=sum(s.metrics.recall for s in scores) / n,
        f_measure=sum(s.metrics.f_measure for s in scores) / n,
        degenerate=any(s.metrics.degenerate for s in scores),
    )
    return CorpusScore(metrics_from_counts(pooled), macro, pooled, scores)


def score_corpus(
    pairs: Sequence[tuple[Sequence[str], Sequence[str]]]
) -> CorpusScore:
    """Score (machine, human) phrase-list pairs; micro metrics pool counts."""
    return score_counts([match_count(machine, human) for machine, human in pairs])
