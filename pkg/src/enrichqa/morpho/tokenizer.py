"""Segmentation into sentences and lexical units."""

from __future__ import annotations

from collections.abc import Collection, Sequence
from logging import getLogger

from nltk.tokenize import RegexpTokenizer

from ..logging import VERBOSE
from .models import Token

__all__ = ["gaps", "tokenize"]

logger = getLogger(__name__)

CLITICS = "je|tu|il|elle|on|nous|vous|ils|elles|ce|le|la|les|lui|leur|y|en"

ELISION = r"(?i:qu|[cdjlmnst])['’](?=[^\W\d_])"
WORD = rf"(?!(?<=-)t-(?:{CLITICS})\b)[^\W\d_]+(?:-(?!(?:t-)?(?:{CLITICS})\b)[^\W\d_]+)*"
NUMBER = r"\d+(?:[.,]\d+)*"
PUNCT = r"[.!?;:,()«»\"…]"

SENTENCE_END = frozenset(".!?")

# Hyphens before inverted clitics, the euphonic "-t-" and stray apostrophes stay in the gaps
_tokenizer = RegexpTokenizer("|".join((ELISION, WORD, NUMBER, PUNCT)))


def _ends_sentence(tokens: Sequence[tuple[int, int]], i: int, text: str, abbreviations: Collection[str]) -> bool:
    start, end = tokens[i]

    if text[start:end] not in SENTENCE_END or i + 1 >= len(tokens):
        return False

    next_start, _ = tokens[i + 1]

    if not any(c.isspace() for c in text[end:next_start]) or not text[next_start].isupper():
        return False

    if i > 0 and text[start] == ".":
        prev = text[slice(*tokens[i - 1])]

        if prev in abbreviations or prev.lower() in abbreviations:
            return False

        # An initial ("J. César")
        if len(prev) == 1 and prev.isupper() and tokens[i - 1][1] == start:
            return False

    return True


def tokenize(text: str, abbreviations: Collection[str] = frozenset()) -> list[list[Token]]:
    """
    Split text into sentences of tokens without readings.

    A sentence ends at `.`, `!` or `?` followed by whitespace and a capital letter, unless the period closes one
    of `abbreviations` or an initial.
    """
    spans = list(_tokenizer.span_tokenize(text))
    sentences = list[list[Token]]()
    current = list[Token]()

    for i, span in enumerate(spans):
        current.append(Token(text[slice(*span)], span, len(sentences), len(current)))

        if _ends_sentence(spans, i, text, abbreviations):
            sentences.append(current)
            current = []

    if current:
        sentences.append(current)

    logger.log(VERBOSE, "Tokenized %d tokens into %d sentences", len(spans), len(sentences))

    return sentences


def gaps(text: str, tokens: Sequence[Token]) -> list[str]:
    """
    The text between consecutive tokens, with the leading and trailing text.

    `gaps[0] + tokens[0].surface + gaps[1] + ... + tokens[-1].surface + gaps[-1]` is `text`.
    """
    out = list[str]()
    cursor = 0

    for token in tokens:
        out.append(text[cursor : token.span[0]])
        cursor = token.span[1]

    out.append(text[cursor:])

    return out
