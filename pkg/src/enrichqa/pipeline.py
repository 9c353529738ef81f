from __future__ import annotations

from collections.abc import Collection, Sequence
from dataclasses import dataclass
from logging import getLogger

from .morpho import FullFormLexicon, Token, analyze_sentence, tag, tokenize
from .syntax import Chunk, Dependency, Grammar, chunk, extract_dependencies

__all__ = ["AnalysisPipeline", "ParsedSentence"]

logger = getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ParsedSentence:
    text: str
    tokens: tuple[Token, ...]
    chunks: tuple[Chunk, ...]
    dependencies: tuple[Dependency, ...]


class AnalysisPipeline:
    """tokenize -> analyze -> tag -> chunk -> extract_dependencies over one immutable set of resources."""

    __slots__ = ("abbreviations", "grammar", "lexicon")

    def __init__(self, lexicon: FullFormLexicon, grammar: Grammar, abbreviations: Collection[str] = ()) -> None:
        self.lexicon = lexicon
        self.grammar = grammar
        self.abbreviations = frozenset(abbreviations)

    def analyze(self, text: str) -> list[list[Token]]:
        """Sentences of analyzed, untagged tokens."""
        return [analyze_sentence(sentence, self.lexicon) for sentence in tokenize(text, self.abbreviations)]

    def tag(self, sentence: Sequence[Token]) -> list[Token]:
        return tag(sentence, self.grammar.tag_rules)

    def parse_tagged(self, text: str, tagged: Sequence[Token]) -> ParsedSentence:
        chunks = chunk(tagged, self.grammar)
        deps = extract_dependencies(chunks, self.grammar)
        surface = text[tagged[0].span[0] : tagged[-1].span[1]] if tagged else ""

        return ParsedSentence(surface, tuple(tagged), tuple(chunks), tuple(deps))

    def parse(self, text: str) -> list[ParsedSentence]:
        return [self.parse_tagged(text, self.tag(sentence)) for sentence in self.analyze(text)]
