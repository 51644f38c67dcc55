"""Word and phrase stemming.

Three stemmers are provided: Porter (conservative), Lovins (aggressive),
and Iterated Lovins (Lovins applied to a fixpoint, the most aggressive).
Phrases stem word by word, preserving order; equality of the resulting
stem sequences is the toolkit's criterion for two phrases matching.
"""

from enum import Enum
from functools import lru_cache

from .lovins import (
    MAX_FIXPOINT_ITERATIONS,
    StemIterationError,
    iterated_lovins_stem as _iterated_lovins_stem,
    lovins_stem as _lovins_stem,
)
from .porter import porter_stem as _porter_stem


class StemmerKind(Enum):
    PORTER = "porter"
    LOVINS = "lovins"
    ITERATED_LOVINS = "iterated-lovins"


@lru_cache(maxsize=None)
def porter_stem(word: str) -> str:
    return _porter_stem(word)


@lru_cache(maxsize=None)
def lovins_stem(word: str) -> str:
    return _lovins_stem(word)


@lru_cache(maxsize=None)
def iterated_lovins_stem(word: str) -> str:
    return _iterated_lovins_stem(word)


porter_stem.__doc__ = _porter_stem.__doc__
lovins_stem.__doc__ = _lovins_stem.__doc__
iterated_lovins_stem.__doc__ = _iterated_lovins_stem.__doc__

_STEMMERS = {
    StemmerKind.PORTER: porter_stem,
    StemmerKind.LOVINS: lovins_stem,
    StemmerKind.ITERATED_LOVINS: iterated_lovins_stem,
}


def stem_word(word: str, kind: StemmerKind) -> str:
    """Stem a single word with the chosen stemmer."""
    return _STEMMERS[kind](word)


def stem_phrase(phrase: str, kind: StemmerKind = StemmerKind.ITERATED_LOVINS) -> tuple[str, ...]:
    """Stem a whitespace-separated phrase word by word, preserving order.

    Returns the stem sequence as a tuple so it can be used directly as a
    dictionary key or set member. An empty phrase yields an empty tuple.
    """
    stemmer = _STEMMERS[kind]
    return tuple(stemmer(word) for word in phrase.split())


__all__ = [
    "MAX_FIXPOINT_ITERATIONS",
    "StemIterationError",
    "StemmerKind",
    "iterated_lovins_stem",
    "lovins_stem",
    "porter_stem",
    "stem_phrase",
    "stem_word",
]
