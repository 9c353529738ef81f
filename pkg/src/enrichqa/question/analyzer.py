"""
Question analysis.

The question goes through the document pipeline without disambiguation or enrichment, around three
normalization steps:

1. on tokens: inverted subject clitics (`fut-il`, `succéda-t-il`) and `est-ce que` are removed;
2. on tagged tokens: the interrogative is replaced by the focus variable (`quel X` by X's variable);
3. on chunks: fronted focus phrases return to their declarative place and inverted verbs follow their subject.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace
from logging import getLogger

from ..enums import ChunkKind, FocusKind, Pos
from ..errors import UnanalyzableQuestionError
from ..lexicon import trait_set
from ..morpho import MorphReading, Token
from ..resources import LexicalResources
from ..settings import InterrogativeEntry
from ..syntax import VARIABLE, Chunk, chunk, extract_dependencies
from .models import Focus, LocalStructure

__all__ = ["analyze_question", "drop_inversion", "place_focus", "reorder_chunks"]

logger = getLogger(__name__)

SUBJECT_CLITICS = frozenset({"je", "tu", "il", "elle", "on", "nous", "vous", "ils", "elles", "ce"})


def _renumber(tokens: Sequence[Token]) -> list[Token]:
    return [replace(t, position=i, sentence_id=0) for i, t in enumerate(tokens)]


def drop_inversion(text: str, tokens: Sequence[Token]) -> list[Token]:
    """Remove `est-ce que` and subject clitics attached by a hyphen to the verb before them."""
    kept = list[Token]()
    i = 0

    while i < len(tokens):
        token = tokens[i]
        before = text[tokens[i - 1].span[1] : token.span[0]] if i else ""

        if (
            i + 2 < len(tokens)
            and [t.surface.lower() for t in tokens[i : i + 2]] == ["est", "ce"]
            and tokens[i + 2].surface.lower().rstrip("'’") in ("que", "qu")
            and text[token.span[1] : tokens[i + 1].span[0]] == "-"
        ):
            i += 3
            continue

        if before.endswith("-") and token.surface.lower() in SUBJECT_CLITICS:
            i += 1
            continue

        kept.append(token)
        i += 1

    return kept


def _variable(token: Token) -> Token:
    return replace(token, readings=(MorphReading(VARIABLE, Pos.INTERROG),), selected=0)


def place_focus(
    tokens: Sequence[Token], resources: LexicalResources
) -> tuple[list[Token], Focus, InterrogativeEntry | None]:
    """Replace the first interrogative of tagged tokens by the focus variable."""
    table = resources.interrogatives

    for i, token in enumerate(tokens):
        if (entry := table.get(token.surface)) is None:
            continue

        out = list(tokens)

        if entry.determiner:
            j = i + 1

            while j < len(tokens) and tokens[j].pos is Pos.ADJ:
                j += 1

            if j < len(tokens) and tokens[j].pos in (Pos.NOUN, Pos.PROPN):
                word = tokens[j]
                focus = Focus(
                    FocusKind.EXPLICIT,
                    trait_set(word.lemma, word.pos, resources.dictionary),
                    word.lemma,
                    word.pos,
                    token.surface,
                )
                out[j] = _variable(word)
                del out[i]
                return _renumber(out), focus, entry

        out[i] = _variable(token)

        if entry.preposition:
            out.insert(i, replace(token, readings=(MorphReading(entry.preposition, Pos.PREP),), selected=0))

        return _renumber(out), Focus(FocusKind.INTERROGATIVE, entry.traits, word=token.surface), entry

    return list(tokens), Focus(FocusKind.INTERROGATIVE), None


def reorder_chunks(chunks: Sequence[Chunk], role: str | None) -> list[Chunk]:
    """
    Put a fronted focus phrase back in declarative order.

    - a fronted focus PP goes to the end (`À quel empereur Domitien succéda` -> `Domitien succéda à VAR`);
    - a fronted focus NP followed by NP VP is the object (`Quel chef César vainquit` -> `César vainquit VAR`);
    - an object interrogative before VP NP swaps with the subject (`Que fonda Plancus` -> `Plancus fonda VAR`);
    - a leading VP NP pair is inverted subject order (`mourut César` -> `César mourut`).
    """
    punct = [c for c in chunks if c.kind is ChunkKind.UNK and c.head_token.pos is Pos.PUNCT]
    content = [c for c in chunks if c not in punct]

    if content and content[0].head_token.lemma == VARIABLE and len(content) > 1:
        focus, rest = content[0], content[1:]
        kinds = [c.kind for c in rest[:2]]

        if focus.kind is ChunkKind.PP:
            content = [*rest, focus]
        elif focus.kind is ChunkKind.NP and kinds == [ChunkKind.NP, ChunkKind.VP]:
            content = [rest[0], rest[1], focus, *rest[2:]]
        elif focus.kind is ChunkKind.NP and role == "object" and kinds == [ChunkKind.VP, ChunkKind.NP]:
            content = [rest[1], rest[0], focus, *rest[2:]]

    if len(content) > 1 and content[0].kind is ChunkKind.VP and content[1].kind is ChunkKind.NP:
        content[0], content[1] = content[1], content[0]

    return content + punct


def analyze_question(text: str, resources: LexicalResources) -> LocalStructure:
    """
    Build the local structure of a question.

    Raises:
        UnanalyzableQuestionError: No dependency could be extracted.
    """
    pipeline = resources.pipeline

    tokens = [t for sentence in pipeline.analyze(text) for t in sentence]
    tokens = _renumber(drop_inversion(text, tokens))
    tagged = pipeline.tag(tokens)
    placed, focus, entry = place_focus(tagged, resources)

    chunks = reorder_chunks(chunk(placed, pipeline.grammar), entry.role if entry else None)
    deps = tuple(extract_dependencies(chunks, pipeline.grammar))

    if not deps:
        raise UnanalyzableQuestionError(text)

    # One focus per question: any interrogative left after placement is a second one.
    if extra := sorted({s.lemma for d in deps for s in d.slots if resources.interrogatives.get(s.lemma)}):
        raise UnanalyzableQuestionError(text, f"more than one interrogative: {', '.join(extra)}")

    host = tuple((i, k) for i, d in enumerate(deps) for k, s in enumerate(d.slots) if s.lemma == VARIABLE)
    local = LocalStructure(text, deps, replace(focus, host=host))

    logger.debug("Question %r: %s (focus %s %s)", text, local, focus.kind, sorted(focus.traits))

    return local
