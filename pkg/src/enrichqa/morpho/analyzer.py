from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import replace
from logging import getLogger

from ..enums import Pos
from .fullform import FullFormLexicon
from .models import MorphReading, Token

__all__ = ["analyze", "analyze_sentence", "guess"]

logger = getLogger(__name__)

_PUNCT_RE = re.compile(r"^[.!?;:,()«»\"…]$")
_NUMBER_RE = re.compile(r"^\d+(?:[.,]\d+)*$")

NOUN_SUFFIXES = ("tion", "sion", "age", "eur", "ée", "ité")

AUXILIARIES = frozenset({"avoir", "être"})

# Agreement ending -> infinitive ending, longest first.
PARTICIPLE_ENDINGS = (
    ("ées", "er"),
    ("ée", "er"),
    ("és", "er"),
    ("é", "er"),
    ("ies", "ir"),
    ("ie", "ir"),
    ("is", "ir"),
    ("i", "ir"),
    ("ues", "re"),
    ("ue", "re"),
    ("us", "re"),
    ("u", "re"),
)


def _participle(word: str) -> MorphReading | None:
    for ending, infinitive in PARTICIPLE_ENDINGS:
        if word.endswith(ending) and len(word) - len(ending) >= 2:
            features = {"part", "past"} | ({"pl"} if ending.endswith("s") else set())
            return MorphReading(word.removesuffix(ending) + infinitive, Pos.VERB, frozenset(features))
    return None


def _verbal(word: str, after_auxiliary: bool) -> MorphReading | None:
    if word.endswith("ment") and len(word) > 6:
        return MorphReading(word, Pos.ADV)

    if word.endswith(("er", "ir")) and len(word) > 3:
        return MorphReading(word, Pos.VERB, frozenset({"inf"}))

    return _participle(word) if after_auxiliary else None


def guess(surface: str, sentence_initial: bool = False, after_auxiliary: bool = False) -> MorphReading:
    """
    Single best-effort reading for a surface form missing from the lexicon.

    Suffixes decide between adverbs (`-ment`), infinitives (`-er`, `-ir`) and nouns, and plural `-s`/`-x` is
    stripped from the lemma. Right after a form of avoir or être, `-é`, `-i`, `-u` and their agreed forms are
    past participles. Capitalized forms are proper nouns.
    """
    if _PUNCT_RE.match(surface):
        return MorphReading(surface, Pos.PUNCT)

    if _NUMBER_RE.match(surface):
        return MorphReading(surface, Pos.NUM)

    word = surface.lower()

    if surface[0].isupper():
        # Sentence-initial capitals stay proper nouns unless a verb or adverb ending says otherwise.
        if sentence_initial and (reading := _verbal(word, after_auxiliary)) is not None:
            return reading
        return MorphReading(surface, Pos.PROPN, frozenset({"cap"} | ({"initial"} if sentence_initial else set())))

    if (reading := _verbal(word, after_auxiliary)) is not None:
        return reading

    features = set[str]()

    if word.endswith(("s", "x")) and len(word) > 3:
        word = word[:-1]
        features.add("pl")

    if word.endswith(NOUN_SUFFIXES):
        features.add("suffix")

    return MorphReading(word, Pos.NOUN, frozenset(features))


def analyze(token: Token, lexicon: FullFormLexicon, previous: Token | None = None) -> Token:
    """Attach every lexicon reading of the token, or exactly one guessed reading."""
    if readings := lexicon.lookup(token.surface):
        return replace(token, readings=readings, selected=None)

    after_auxiliary = previous is not None and any(
        r.pos is Pos.VERB and r.lemma in AUXILIARIES for r in previous.readings
    )
    reading = guess(token.surface, token.position == 0, after_auxiliary)
    logger.debug("Guessed %s for unknown form %r", reading.pos, token.surface)

    return replace(token, readings=(reading,), selected=None)


def analyze_sentence(sentence: Sequence[Token], lexicon: FullFormLexicon) -> list[Token]:
    analyzed = list[Token]()

    for token in sentence:
        analyzed.append(analyze(token, lexicon, analyzed[-1] if analyzed else None))

    return analyzed
