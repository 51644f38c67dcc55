"""Labelled-corpus loading, keyphrase-block stripping, splits, and statistics.

A corpus is a flat directory of UTF-8 ``<id>.txt`` documents paired with
``<id>.key`` target files (one phrase per line, blank lines ignored).
An optional ``groups.tsv`` (``id<TAB>group``) assigns documents to
groups, used for stratified and leave-group-out splits.
"""

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .stemming import iterated_lovins_stem, stem_phrase
from .tagging import tokenize

KEYPHRASE_LINE_PREFIXES = ("keywords:", "keyphrases:")
UNIQUE_PHRASE_RATIO = 0.25


class CorpusError(Exception):
    """Malformed corpus directory or document."""


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    text: str
    targets: tuple[str, ...]
    group: str | None = None


@dataclass(frozen=True)
class CorpusStats:
    doc_count: int
    words_per_keyphrase: dict[int, float]
    keyphrases_per_doc_mean: float
    keyphrases_per_doc_std: float
    words_per_keyphrase_mean: float
    words_per_keyphrase_std: float
    words_per_doc_mean: float
    words_per_doc_std: float
    pct_keyphrases_in_text: float
    est_unique_phrases: int


def _normalize_phrase(raw: str) -> str:
    return " ".join(raw.split())


def _parse_key_file(path: Path) -> tuple[str, ...]:
    phrases = []
    for line in path.read_text(encoding="utf-8").splitlines():
        phrase = _normalize_phrase(line)
        if phrase:
            phrases.append(phrase)
    seen: dict[tuple[str, ...], str] = {}
    for phrase in phrases:
        stems = stem_phrase(phrase)
        if stems in seen:
            raise CorpusError(
                f"{path.name}: targets {seen[stems]!r} and {phrase!r} "
                "collapse to the same stem sequence"
            )
        seen[stems] = phrase
    return tuple(phrases)


def _load_groups(directory: Path, ids: set[str]) -> dict[str, str]:
    groups_path = directory / "groups.tsv"
    if not groups_path.exists():
        return {}
    groups: dict[str, str] = {}
    for line_number, line in enumerate(
        groups_path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            doc_id, group = line.split("\t")
        except ValueError as exc:
            raise CorpusError(
                f"groups.tsv line {line_number}: expected 'id<TAB>group'"
            ) from exc
        if doc_id not in ids:
            raise CorpusError(f"groups.tsv names unknown document {doc_id!r}")
        groups[doc_id] = group
    return groups


def load_corpus(directory: str | Path) -> list[LabeledDocument]:
    """Load all document/target pairs from a corpus directory, sorted by id.

    Raises CorpusError for an orphaned ``.txt``/``.key`` file or for a
    document whose targets are not distinct under stemming. An empty or
    missing pair set in an existing directory yields an empty corpus.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusError(f"not a corpus directory: {directory}")
    texts = {p.stem: p for p in directory.glob("*.txt")}
    keys = {p.stem: p for p in directory.glob("*.key")}
    for orphan in sorted(set(texts) - set(keys)):
        raise CorpusError(f"{texts[orphan].name} has no matching .key file")
    for orphan in sorted(set(keys) - set(texts)):
        raise CorpusError(f"{keys[orphan].name} has no matching .txt file")

    groups = _load_groups(directory, set(texts))
    documents = []
    for doc_id in sorted(texts):
        documents.append(
            LabeledDocument(
                id=doc_id,
                text=texts[doc_id].read_text(encoding="utf-8"),
                targets=_parse_key_file(keys[doc_id]),
                group=groups.get(doc_id),
            )
        )
    return documents


def strip_keyphrase_block(text: str) -> str:
    """Drop lines that start (after indentation) with ``keywords:``/``keyphrases:``.

    All other text is preserved byte-for-byte.
    """
    kept = [
        line
        for line in text.splitlines(keepends=True)
        if not line.lstrip().lower().startswith(KEYPHRASE_LINE_PREFIXES)
    ]
    return "".join(kept)


def _round_half_up(value: float) -> int:
    return math.floor(value + 0.5)


def split_corpus(
    corpus: Sequence[LabeledDocument], train_fraction: float, seed: int
) -> tuple[list[LabeledDocument], list[LabeledDocument]]:
    """Randomly split a corpus, stratified by group when groups exist.

    Each group contributes round(train_fraction * size) documents to the
    training side, keeping at least one test document for groups of two
    or more. The split is deterministic for a fixed seed; train and test
    partition the corpus.
    """
    if not corpus:
        raise CorpusError("cannot split an empty corpus")
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must be strictly between 0 and 1")

    by_group: dict[str, list[LabeledDocument]] = {}
    for doc in corpus:
        by_group.setdefault(doc.group or "", []).append(doc)

    rng = random.Random(seed)
    train: list[LabeledDocument] = []
    test: list[LabeledDocument] = []
    for group in sorted(by_group):
        members = sorted(by_group[group], key=lambda d: d.id)
        rng.shuffle(members)
        n_train = _round_half_up(train_fraction * len(members))
        if len(members) >= 2 and n_train == len(members):
            n_train = len(members) - 1
        train.extend(members[:n_train])
        test.extend(members[n_train:])
    train.sort(key=lambda d: d.id)
    test.sort(key=lambda d: d.id)
    return train, test


def split_leave_group_out(
    corpus: Sequence[LabeledDocument], group: str
) -> tuple[list[LabeledDocument], list[LabeledDocument]]:
    """Hold one whole group out as the test set."""
    if not corpus:
        raise CorpusError("cannot split an empty corpus")
    test = [doc for doc in corpus if doc.group == group]
    if not test:
        raise CorpusError(f"no documents in group {group!r}")
    train = [doc for doc in corpus if doc.group != group]
    return train, test


def _target_in_text(target: str, sentence_stems: list[list[str]]) -> bool:
    needle = list(stem_phrase(target))
    size = len(needle)
    if size == 0:
        return False
    for stems in sentence_stems:
        for start in range(len(stems) - size + 1):
            if stems[start : start + size] == needle:
                return True
    return False


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    if not values:
        return 0.0, 0.0
    n = len(values)
    mean = sum(values) / n
    variance = sum((v - mean) ** 2 for v in values) / n
    return mean, math.sqrt(variance)


def corpus_stats(corpus: Sequence[LabeledDocument]) -> CorpusStats:
    """Headline statistics for a corpus; an empty corpus yields zeroes.

    A target counts as appearing in its document when its stem sequence
    occurs as a contiguous within-sentence window of stemmed tokens of
    the text (with any keyphrase block stripped first), so inflectional
    variants still count. Word counts are plain whitespace tokens,
    including stop words and repetitions.
    """
    keyphrase_lengths: list[int] = []
    keyphrases_per_doc: list[float] = []
    words_per_doc: list[float] = []
    targets_total = 0
    targets_in_text = 0

    for doc in corpus:
        body = strip_keyphrase_block(doc.text)
        words_per_doc.append(len(body.split()))
        keyphrases_per_doc.append(len(doc.targets))
        keyphrase_lengths.extend(len(t.split()) for t in doc.targets)

        sentence_stems: dict[int, list[str]] = {}
        for surface, sentence_id in tokenize(body):
            sentence_stems.setdefault(sentence_id, []).append(
                iterated_lovins_stem(surface.lower())
            )
        sentences = list(sentence_stems.values())
        targets_total += len(doc.targets)
        targets_in_text += sum(
            1 for target in doc.targets if _target_in_text(target, sentences)
        )

    histogram: dict[int, float] = {}
    if keyphrase_lengths:
        for length in sorted(set(keyphrase_lengths)):
            histogram[length] = keyphrase_lengths.count(length) / len(keyphrase_lengths)

    kp_mean, kp_std = _mean_std(keyphrases_per_doc)
    wk_mean, wk_std = _mean_std([float(n) for n in keyphrase_lengths])
    wd_mean, wd_std = _mean_std(words_per_doc)
    total_words = int(sum(words_per_doc))
    return CorpusStats(
        doc_count=len(corpus),
        words_per_keyphrase=histogram,
        keyphrases_per_doc_mean=kp_mean,
        keyphrases_per_doc_std=kp_std,
        words_per_keyphrase_mean=wk_mean,
        words_per_keyphrase_std=wk_std,
        words_per_doc_mean=wd_mean,
        words_per_doc_std=wd_std,
        pct_keyphrases_in_text=(
            targets_in_text / targets_total if targets_total else 0.0
        ),
        est_unique_phrases=_round_half_up(UNIQUE_PHRASE_RATIO * total_words),
    )
