"""Whitespace-and-punctuation tokenizer with sentence segmentation.

Words are split on whitespace; surrounding punctuation (sentence-final
marks, commas, semicolons, colons, parentheses, brackets, quotes, and
dashes) becomes separate tokens.  Possessive markers are split off as
their own tokens: a trailing apostrophe or apostrophe-s, in either the
ASCII or typographic form.  Hyphenated words stay whole.

A sentence boundary is placed after ``.``, ``!`` or ``?`` when the next
whitespace-separated chunk starts (after any opening punctuation) with a
capital letter.  End of text always closes the final sentence.
"""

import re
from typing import NamedTuple


class Token(NamedTuple):
    surface: str
    sentence_id: int


_LEADING_PUNCT = "\"'`“”‘’([{—–"
_TRAILING_PUNCT = ".,!?;:\"`“”‘)]}—–%"
_SENTENCE_FINAL = {".", "!", "?"}
_APOSTROPHES = ("'", "’")
_DASH_SPLIT = re.compile(r"([—–])|--+")


def _split_chunk(chunk: str) -> list[str]:
    """Split one whitespace-separated chunk into tokens."""
    pieces = [p for p in _DASH_SPLIT.split(chunk) if p]
    tokens: list[str] = []
    for piece in pieces:
        tokens.extend(_split_piece(piece))
    return tokens


def _split_piece(piece: str) -> list[str]:
    leading: list[str] = []
    while piece and piece[0] in _LEADING_PUNCT:
        leading.append(piece[0])
        piece = piece[1:]

    trailing: list[str] = []
    while piece:
        if piece[-1] in _APOSTROPHES:
            break  # possessive marker, split below
        if piece[-1] in _TRAILING_PUNCT:
            trailing.append(piece[-1])
            piece = piece[:-1]
            continue
        break

    core: list[str] = []
    if piece:
        if len(piece) > 2 and piece[-1] == "s" and piece[-2] in _APOSTROPHES:
            core = _split_piece(piece[:-2]) + [piece[-2:]]
        elif len(piece) > 1 and piece[-1] in _APOSTROPHES:
            core = _split_piece(piece[:-1]) + [piece[-1]]
        else:
            core = [piece]

    return leading + core + list(reversed(trailing))


def _starts_capitalized(chunk: str) -> bool:
    stripped = chunk.lstrip(_LEADING_PUNCT)
    return bool(stripped) and stripped[0].isupper()


def tokenize(text: str) -> list[Token]:
    """Tokenize text into (surface, sentence_id) tokens.

    Empty or whitespace-only text yields an empty list.
    """
    chunks = text.split()
    tokens: list[Token] = []
    sentence_id = 0
    for position, chunk in enumerate(chunks):
        chunk_tokens = _split_chunk(chunk)
        tokens.extend(Token(surface, sentence_id) for surface in chunk_tokens)
        if (
            chunk_tokens
            and chunk_tokens[-1] in _SENTENCE_FINAL
            and position + 1 < len(chunks)
            and _starts_capitalized(chunks[position + 1])
        ):
            sentence_id += 1
    return tokens
