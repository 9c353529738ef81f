"""Segmentation, morphological analysis and reading selection."""

from .analyzer import analyze, analyze_sentence, guess
from .fullform import FullFormLexicon, load_fullform_lexicon
from .models import MorphReading, Token
from .tagger import TagRule, tag
from .tokenizer import gaps, tokenize

__all__ = [
    "FullFormLexicon",
    "MorphReading",
    "TagRule",
    "Token",
    "analyze",
    "analyze_sentence",
    "gaps",
    "guess",
    "load_fullform_lexicon",
    "tag",
    "tokenize",
]
