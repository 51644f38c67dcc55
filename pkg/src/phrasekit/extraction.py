"""Keyphrase extraction.

Candidate phrases are contiguous one- to three-token windows, within a
single sentence, whose tags match the noun-phrase pattern: zero or more
nouns or adjectives followed by one final noun or gerund.  Candidates
are keyed by their Iterated Lovins stem sequence, so inflectional
variants of a phrase pool their counts; each selected stem sequence is
realized as its most frequent surface form.

Two extractors are provided: the tuned noun-phrase frequency extractor,
which outputs the top ``n1``/``n2``/``n3`` stem sequences per phrase
length, and a fixed five-single-word frequency baseline.  A stem-dedupe
post-processor for third-party phrase lists rounds out the module.
"""

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cache
from importlib import resources

from .stemming import iterated_lovins_stem, stem_phrase
from .tagging import PosTag, TaggedToken, tokenize

MODIFIER_TAGS = frozenset(
    {PosTag.NN, PosTag.NNS, PosTag.NNP, PosTag.NNPS, PosTag.JJ}
)
FINAL_TAGS = frozenset(
    {PosTag.NN, PosTag.NNS, PosTag.NNP, PosTag.NNPS, PosTag.VBG}
)

MAX_PHRASE_WORDS = 3
BASELINE_WORD_COUNT = 5


@dataclass(frozen=True)
class NpfModel:
    """Output counts per phrase length for the noun-phrase frequency extractor."""

    n1: int
    n2: int
    n3: int

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "n3"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

    def slot(self, length_class: int) -> int:
        return (self.n1, self.n2, self.n3)[length_class - 1]


@dataclass
class PhraseCandidate:
    """Aggregated occurrences of one stem sequence of one length class."""

    stems: tuple[str, ...]
    count: int = 0
    first_index: int = -1
    surface_counts: Counter = field(default_factory=Counter)
    surface_first_index: dict[str, int] = field(default_factory=dict)

    @property
    def length_class(self) -> int:
        return len(self.stems)

    def add(self, surface: str, index: int) -> None:
        if self.count == 0:
            self.first_index = index
        self.count += 1
        self.surface_counts[surface] += 1
        self.surface_first_index.setdefault(surface, index)

    def best_surface(self) -> str:
        """Most frequent surface realization; earliest occurrence wins ties."""
        return min(
            self.surface_counts,
            key=lambda s: (-self.surface_counts[s], self.surface_first_index[s]),
        )


def pattern_matches(tags: Sequence[PosTag]) -> bool:
    """True iff the tag window fits the noun-phrase pattern.

    All tags but the last must be nouns or adjectives; the last must be a
    noun or a gerund.  A gerund is only legal in the final position.
    """
    if not tags:
        return False
    return all(tag in MODIFIER_TAGS for tag in tags[:-1]) and tags[-1] in FINAL_TAGS


def generate_candidates(doc: Sequence[TaggedToken]) -> list[PhraseCandidate]:
    """Collect every in-sentence window of 1-3 tokens matching the pattern.

    Overlapping windows all count: a three-word match also contributes its
    one- and two-word sub-windows.  Counts aggregate per stem sequence; the
    returned list is ordered by first occurrence.
    """
    candidates: dict[tuple[str, ...], PhraseCandidate] = {}
    for start in range(len(doc)):
        first = doc[start]
        for length in range(1, MAX_PHRASE_WORDS + 1):
            end = start + length
            if end > len(doc):
                break
            window = doc[start:end]
            if window[-1].sentence_id != first.sentence_id:
                break
            if not pattern_matches([token.tag for token in window]):
                continue
            stems = tuple(
                iterated_lovins_stem(token.surface.lower()) for token in window
            )
            surface = " ".join(token.surface for token in window)
            candidate = candidates.get(stems)
            if candidate is None:
                candidate = candidates[stems] = PhraseCandidate(stems)
            candidate.add(surface, first.index)
    return sorted(candidates.values(), key=lambda c: c.first_index)


def rank_candidates(
    candidates: Iterable[PhraseCandidate],
) -> dict[int, list[PhraseCandidate]]:
    """Rank candidates per length class by count (desc), first occurrence (asc)."""
    by_class: dict[int, list[PhraseCandidate]] = {1: [], 2: [], 3: []}
    for candidate in candidates:
        by_class[candidate.length_class].append(candidate)
    for ranked in by_class.values():
        ranked.sort(key=lambda c: (-c.count, c.first_index))
    return by_class


def extract_npf(doc: Sequence[TaggedToken], model: NpfModel) -> list[str]:
    """Extract keyphrases with the noun-phrase frequency algorithm.

    For each phrase length k, the ``model.slot(k)`` most frequent stem
    sequences are output as their most frequent surface forms, one-word
    phrases first.  Classes are selected independently, so a top single
    word may also appear inside a top multi-word phrase.
    """
    ranked = rank_candidates(generate_candidates(doc))
    phrases: list[str] = []
    for length_class in (1, 2, 3):
        slots = model.slot(length_class)
        phrases.extend(
            candidate.best_surface() for candidate in ranked[length_class][:slots]
        )
    return phrases


@cache
def stopwords() -> frozenset[str]:
    """The embedded stop word list, lowercased."""
    text = (
        resources.files("phrasekit")
        .joinpath("data/stopwords_en.txt")
        .read_text(encoding="utf-8")
    )
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def extract_top5_words(text: str) -> list[str]:
    """Five-single-word frequency baseline.

    Ranks non-stopword content words by stem frequency and outputs the
    most frequent surface form of each of the top five stems, lowercased.
    Fewer than five distinct content stems yield a shorter list; the
    output never contains a multi-word phrase or an uppercase character.
    """
    stop = stopwords()
    by_stem: dict[str, PhraseCandidate] = {}
    for index, (surface, _sentence) in enumerate(tokenize(text)):
        lowered = surface.lower()
        if lowered in stop or not any(ch.isalpha() for ch in surface):
            continue
        stem = iterated_lovins_stem(lowered)
        candidate = by_stem.get(stem)
        if candidate is None:
            candidate = by_stem[stem] = PhraseCandidate((stem,))
        candidate.add(lowered, index)
    ranked = sorted(by_stem.values(), key=lambda c: (-c.count, c.first_index))
    return [c.best_surface() for c in ranked[:BASELINE_WORD_COUNT]]


def dedupe_by_stem(phrases: Sequence[str]) -> list[str]:
    """Keep the first phrase for each distinct Iterated Lovins stem sequence."""
    seen: set[tuple[str, ...]] = set()
    kept: list[str] = []
    for phrase in phrases:
        stems = stem_phrase(phrase)
        if stems not in seen:
            seen.add(stems)
            kept.append(phrase)
    return kept
