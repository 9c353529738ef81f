from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import cache
from logging import getLogger

from nltk import RegexpParser, Tree

from ..enums import ChunkKind, Pos
from ..logging import VERBOSE
from ..morpho.models import Token
from .grammar import DependencyRule, Grammar, LhsElement
from .models import Chunk, Dependency, Slot

__all__ = ["chunk", "extract_dependencies", "find_head"]

logger = getLogger(__name__)

NOMINAL_HEADS = (Pos.NOUN, Pos.PROPN, Pos.PRON, Pos.NUM, Pos.INTERROG)


@cache
def _parser(rules: str) -> RegexpParser:
    return RegexpParser(rules)


def find_head(kind: ChunkKind, tokens: Sequence[Token]) -> int:
    """Sentence position of the head of a chunk."""
    match kind:
        case ChunkKind.NP | ChunkKind.PP:
            body = tokens[1:] if kind is ChunkKind.PP and len(tokens) > 1 else tokens
            for pos in NOMINAL_HEADS:
                if head := next((t for t in body if t.pos is pos), None):
                    return head.position
            return body[-1].position
        case ChunkKind.VP:
            return next((t for t in reversed(tokens) if t.pos is Pos.VERB), tokens[-1]).position
        case ChunkKind.AP:
            return next((t for t in reversed(tokens) if t.pos is Pos.ADJ), tokens[-1]).position
        case _:
            return tokens[0].position


def chunk(sentence: Sequence[Token], grammar: Grammar) -> list[Chunk]:
    """
    Group tagged tokens into minimal phrases with the cascaded chunk stages of `grammar`.

    Tokens left out by every stage become single-token `UNK` chunks, so the chunks partition the sentence.
    """
    if not sentence:
        return []

    by_position = {t.position: t for t in sentence}
    tree = _parser(grammar.nltk_grammar).parse([(str(t.position), t.pos.value) for t in sentence])

    chunks = list[Chunk]()

    for node in tree:
        if isinstance(node, Tree):
            kind = ChunkKind(node.label())
            tokens = tuple(by_position[int(word)] for word, _ in node.leaves())
        else:
            kind = ChunkKind.UNK
            tokens = (by_position[int(node[0])],)

        chunks.append(Chunk(kind, tokens, find_head(kind, tokens)))

    logger.log(VERBOSE, "Chunks: %s", lambda: " ".join(str(c) for c in chunks))

    return chunks


def _accepts(element: LhsElement, chunk: Chunk, copulas: frozenset[str]) -> bool:
    if chunk.kind not in element.kinds:
        return False
    if element.copula is None:
        return True
    return (chunk.head_token.lemma in copulas) == element.copula


def _windows(
    elements: Sequence[LhsElement], seq: Sequence[Chunk], i: int, copulas: frozenset[str]
) -> Iterator[tuple[Chunk | None, ...]]:
    """Every way `elements` match `seq` from index `i`. Repeated elements bind to `None`."""
    if not elements:
        yield ()
        return

    first, rest = elements[0], elements[1:]

    if first.star:
        j = i
        while True:
            for tail in _windows(rest, seq, j, copulas):
                yield (None, *tail)
            if j < len(seq) and _accepts(first, seq[j], copulas):
                j += 1
            else:
                break
    elif i < len(seq) and _accepts(first, seq[i], copulas):
        for tail in _windows(rest, seq, i + 1, copulas):
            yield (seq[i], *tail)


def _slot(kind: str, chunk: Chunk) -> Slot | None:
    match kind:
        case "$":
            head = chunk.head_token
            return Slot(head.lemma, head.pos, head.position)
        case "%":
            prep = chunk.tokens[0]
            if chunk.kind is not ChunkKind.PP or prep.pos is not Pos.PREP:
                return None
            return Slot(prep.lemma, prep.pos, prep.position)
        case "@":
            head = chunk.head_token
            after = head.position + 1
            if head.pos is not Pos.NOUN or after not in chunk.token_range:
                return None
            apposed = chunk.tokens[after - chunk.tokens[0].position]
            return Slot(apposed.lemma, apposed.pos, apposed.position) if apposed.pos is Pos.PROPN else None
    return None


def _emit(rule: DependencyRule, window: Sequence[Chunk | None]) -> Dependency | None:
    slots = list[Slot]()

    for ref in rule.refs:
        chunk = window[ref.index]
        assert chunk is not None

        if (slot := _slot(ref.kind, chunk)) is None:
            return None

        slots.append(slot)

    if len({s.token for s in slots}) != len(slots):
        return None

    return Dependency(rule.name, rule.features, tuple(slots))


def extract_dependencies(chunks: Sequence[Chunk], grammar: Grammar) -> list[Dependency]:
    """
    Apply the dependency rules in order over windows of consecutive chunks.

    Punctuation chunks are transparent. Rules consume nothing, so a head may take part in several dependencies.
    The result keeps the first occurrence of each dependency.
    """
    seq = [c for c in chunks if not (c.kind is ChunkKind.UNK and c.head_token.pos is Pos.PUNCT)]
    found = dict[Dependency, None]()

    for rule in grammar.dependency_rules:
        for start in range(len(seq)):
            for window in _windows(rule.elements, seq, start, grammar.copulas):
                if (dep := _emit(rule, window)) is not None:
                    found.setdefault(dep)

    logger.log(VERBOSE, "Dependencies: %s", lambda: ", ".join(str(d) for d in found))

    return list(found)
