"""Tokenization and part-of-speech tagging."""

from .tagger import (
    PosTag,
    TaggedToken,
    Tagger,
    default_lexicon,
    load_lexicon,
    tag_document,
    tag_heuristic,
)
from .tokenizer import Token, tokenize

__all__ = [
    "PosTag",
    "TaggedToken",
    "Tagger",
    "Token",
    "default_lexicon",
    "load_lexicon",
    "tag_document",
    "tag_heuristic",
    "tokenize",
]
