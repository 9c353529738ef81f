"""The rule grammar: tagger preferences, chunk stages and dependency rules, loaded from JSON."""

from __future__ import annotations

import re
from functools import cached_property
from typing import NamedTuple, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..enums import ChunkKind, Feature, Relation
from ..morpho.tagger import TagRule
from .patterns import check_shape

__all__ = ["ChunkStage", "DependencyRule", "Grammar", "LhsElement", "SlotRef"]

_ELEMENT_RE = re.compile(r"^(?P<kinds>[A-Z]+(?:\|[A-Z]+)*)(?P<star>\*)?(?:\[(?P<neg>!)?copula\])?$")
_REF_RE = re.compile(r"^(?P<kind>[$%@])(?P<index>\d+)$")


class LhsElement(NamedTuple):
    kinds: frozenset[ChunkKind]
    star: bool = False
    copula: bool | None = None
    """For VP elements: require (`True`) or forbid (`False`) a copula head."""


class SlotRef(NamedTuple):
    kind: str
    """`$` head lemma, `%` preposition of a PP, `@` proper noun apposed to a noun head."""
    index: int
    """0-based index into the rule's left-hand side."""


class ChunkStage(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    label: ChunkKind
    pattern: str = Field(min_length=1)
    """Tag pattern in `nltk.RegexpParser` notation, e.g. `<DET>?<ADJ>*<NOUN>`."""


class DependencyRule(BaseModel):
    """
    Emit one dependency for every chunk window matching `lhs`.

    `lhs` is a space separated sequence of chunk kinds (`NP`, `NP|PP`), `*` marks zero or more,
    `VP[copula]`/`VP[!copula]` restrict the verb head. `emit` lists the slots as `$n`, `%n` or `@n`
    references to the n-th (1-based) element.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: Relation
    features: frozenset[Feature] = frozenset()
    lhs: str
    emit: list[str] = Field(min_length=2, max_length=3)

    @field_validator("lhs")
    @classmethod
    def _parse_lhs(cls, value: str) -> str:
        if not value.split():
            raise ValueError("empty left-hand side")

        for part in value.split():
            if not (m := _ELEMENT_RE.match(part)):
                raise ValueError(f"invalid chunk element {part!r}")
            for kind in m["kinds"].split("|"):
                ChunkKind(kind)

        return value

    @model_validator(mode="after")
    def _check_refs(self) -> Self:
        elements = self.elements

        for ref in self.emit:
            if not (m := _REF_RE.match(ref)):
                raise ValueError(f"invalid slot reference {ref!r}")

            index = int(m["index"]) - 1

            if not 0 <= index < len(elements):
                raise ValueError(f"{ref!r} is outside the {len(elements)} element(s) of {self.lhs!r}")
            if elements[index].star:
                raise ValueError(f"{ref!r} refers to a repeated element")

        if reason := check_shape(self.name, self.features, len(self.emit)):
            raise ValueError(reason)

        return self

    @cached_property
    def elements(self) -> tuple[LhsElement, ...]:
        out = list[LhsElement]()

        for part in self.lhs.split():
            m = _ELEMENT_RE.match(part)
            assert m
            copula = m["neg"] is None if part.endswith("copula]") else None
            out.append(LhsElement(frozenset(ChunkKind(k) for k in m["kinds"].split("|")), bool(m["star"]), copula))

        return tuple(out)

    @cached_property
    def refs(self) -> tuple[SlotRef, ...]:
        return tuple(SlotRef(ref[0], int(ref[1:]) - 1) for ref in self.emit)


class Grammar(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tag_rules: list[TagRule] = []
    chunk_stages: list[ChunkStage] = Field(min_length=1)
    dependency_rules: list[DependencyRule] = []
    copulas: frozenset[str] = frozenset({"être", "devenir", "rester", "demeurer"})
    preposition_classes: list[frozenset[str]] = []
    """Prepositions compared as equal when matching (`de`, `du`, `des`)."""

    @cached_property
    def nltk_grammar(self) -> str:
        return "\n".join(f"{stage.label}: {{{stage.pattern}}}" for stage in self.chunk_stages)

    def preposition_class(self, lemma: str) -> frozenset[str]:
        for cls in self.preposition_classes:
            if lemma in cls:
                return cls
        return frozenset({lemma})

    def same_preposition(self, a: str, b: str) -> bool:
        return a == b or b in self.preposition_class(a)
