"""Heuristic part-of-speech tagger over a collapsed tag set.

The tag set keeps only the distinctions the noun-phrase pattern needs:
the four noun tags, adjectives, gerunds, the possessive marker, and a
catch-all OTHER for everything else.  Tags are assigned per token by, in
priority order: possessive-marker check, embedded lexicon lookup, suffix
rules, a proper-noun rule for capitalized words that are not
sentence-initial, and a default of NN.  Alternative taggers can be
plugged in anywhere a ``Tagger`` is accepted; they must return one tag
per input token.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cache
from importlib import resources
from pathlib import Path

from .tokenizer import Token, tokenize


class PosTag(Enum):
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    NNPS = "NNPS"
    JJ = "JJ"
    VBG = "VBG"
    POS = "POS"
    OTHER = "OTHER"


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: PosTag
    index: int
    sentence_id: int


Tagger = Callable[[Sequence[Token]], list[PosTag]]

_POSSESSIVES = {"'", "’", "'s", "’s"}
_JJ_SUFFIXES = ("ous", "al", "ive", "ic", "able", "ful")
_VOWELS = "aeiou"


def load_lexicon(path: str | Path) -> dict[str, PosTag]:
    """Load a lexicon file: one ``surface<TAB>tag`` entry per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lexicon: dict[str, PosTag] = {}
    text = Path(path).read_text(encoding="utf-8")
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            surface, tag = line.split("\t")
            lexicon[surface] = PosTag(tag)
        except ValueError as exc:
            raise ValueError(f"bad lexicon entry at line {line_number}: {line!r}") from exc
    return lexicon


@cache
def default_lexicon() -> dict[str, PosTag]:
    """The built-in lexicon shipped with the package."""
    source = resources.files("phrasekit").joinpath("data/lexicon_en.tsv")
    with resources.as_file(source) as path:
        return load_lexicon(path)


def _plausible_base(base: str) -> bool:
    return len(base) >= 2 and any(ch in _VOWELS for ch in base.lower())


def _suffix_tag(lowered: str, lexicon: dict[str, PosTag]) -> PosTag | None:
    if lowered.endswith("ing") and len(lowered) >= 5:
        return PosTag.VBG
    for suffix in _JJ_SUFFIXES:
        if lowered.endswith(suffix) and len(lowered) >= len(suffix) + 2:
            return PosTag.JJ
    if (
        lowered.endswith("s")
        and not lowered.endswith("ss")
        and len(lowered) >= 3
        and lowered[-2] not in _VOWELS
        and lowered[-2].isalpha()
    ):
        base = lowered[:-1]
        if base in lexicon or _plausible_base(base):
            return PosTag.NNS
    return None


def _looks_plural(lowered: str) -> bool:
    return lowered.endswith("s") and not lowered.endswith("ss")


def tag_heuristic(
    tokens: Sequence[Token], lexicon: dict[str, PosTag] | None = None
) -> list[PosTag]:
    """Assign one PosTag per token; output length always equals input length."""
    if lexicon is None:
        lexicon = default_lexicon()

    tags: list[PosTag] = []
    sentence_has_word = False
    previous_sentence = None
    for surface, sentence_id in tokens:
        if sentence_id != previous_sentence:
            sentence_has_word = False
            previous_sentence = sentence_id
        mid_sentence = sentence_has_word
        if any(ch.isalnum() for ch in surface):
            sentence_has_word = True

        tags.append(_tag_one(surface, mid_sentence, lexicon))
    return tags


def _tag_one(surface: str, mid_sentence: bool, lexicon: dict[str, PosTag]) -> PosTag:
    if surface in _POSSESSIVES:
        return PosTag.POS
    if not any(ch.isalnum() for ch in surface):
        return PosTag.OTHER
    if any(ch.isdigit() for ch in surface):
        return PosTag.OTHER

    tag = lexicon.get(surface) or lexicon.get(surface.lower())
    if tag is not None:
        return tag

    lowered = surface.lower()
    suffix_tag = _suffix_tag(lowered, lexicon)
    if suffix_tag is not None:
        if suffix_tag is PosTag.NNS and mid_sentence and surface[0].isupper():
            return PosTag.NNPS
        return suffix_tag

    if mid_sentence and surface[0].isupper():
        return PosTag.NNPS if _looks_plural(lowered) else PosTag.NNP
    return PosTag.NN


def tag_document(
    text: str,
    tagger: Tagger | None = None,
) -> list[TaggedToken]:
    """Tokenize and tag a document, producing position-indexed tokens."""
    tokens = tokenize(text)
    tags = tag_heuristic(tokens) if tagger is None else list(tagger(tokens))
    if len(tags) != len(tokens):
        raise ValueError(
            f"tagger returned {len(tags)} tags for {len(tokens)} tokens"
        )
    return [
        TaggedToken(token.surface, tag, index, token.sentence_id)
        for index, (token, tag) in enumerate(zip(tokens, tags))
    ]
