"""Lexical resource models: file records (pydantic) and their immutable runtime form."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator

from ..enums import Pos
from ..errors import UnknownSenseError
from ..syntax.patterns import DependencyPattern, format_patterns

__all__ = [
    "Derivative",
    "DerivativeRecord",
    "HeadwordRecord",
    "RewriteSchema",
    "RewriteSchemaRecord",
    "SenseDictionary",
    "SenseEntry",
    "SenseRecord",
    "SynonymGroup",
    "SynonymGroupRecord",
]

type Headword = tuple[str, Pos]


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class DerivativeRecord(_Record):
    lemma: str = Field(min_length=1)
    pos: Pos
    kind: str = Field(min_length=1)


class SenseRecord(_Record):
    id: PositiveInt
    gloss: str = ""
    sem_class: str = Field(min_length=1)
    domain: str = Field(min_length=1)
    parasynonyms: list[str] = []
    derivatives: list[DerivativeRecord] = []
    examples: list[str] = []
    schemas: list[str] = []

    @field_validator("sem_class", "domain")
    @classmethod
    def _symbol(cls, value: str) -> str:
        if not value.strip() or any(c.isspace() for c in value):
            raise ValueError("must be a non-empty symbol without whitespace")
        return value


class HeadwordRecord(_Record):
    lemma: str = Field(min_length=1)
    pos: Pos
    senses: list[SenseRecord]


class SynonymGroupRecord(_Record):
    source: str = Field(min_length=1)
    members: list[str]


class RewriteSchemaRecord(_Record):
    kind: str = Field(min_length=1)
    from_: str = Field(alias="from")
    to: str


class Derivative(NamedTuple):
    lemma: str
    pos: Pos
    kind: str


@dataclass(frozen=True, slots=True)
class SenseEntry:
    """One numbered sense of a headword."""

    lemma: str
    pos: Pos
    sense_id: int
    gloss: str
    sem_class: str
    """Semantic class (`HUMAN`, `ACTION`, ...)."""
    domain: str
    """Field of application (`AUTHORITY`, `MILITARY`, ...)."""
    parasynonyms: frozenset[str] = frozenset()
    derivatives: frozenset[Derivative] = frozenset()
    examples: tuple[str, ...] = ()
    schemas: tuple[str, ...] = ()

    @property
    def traits(self) -> tuple[str, str]:
        return self.sem_class, self.domain

    @property
    def label(self) -> str:
        return f"{self.lemma}/{self.pos}#{self.sense_id}"

    def to_record(self) -> SenseRecord:
        return SenseRecord(
            id=self.sense_id,
            gloss=self.gloss,
            sem_class=self.sem_class,
            domain=self.domain,
            parasynonyms=sorted(self.parasynonyms),
            derivatives=[DerivativeRecord(lemma=d.lemma, pos=d.pos, kind=d.kind) for d in sorted(self.derivatives)],
            examples=list(self.examples),
            schemas=list(self.schemas),
        )


@dataclass(frozen=True, slots=True)
class SynonymGroup:
    """An unsensed set of interchangeable lemmas from one external dictionary."""

    members: frozenset[str]
    source: str

    def __post_init__(self) -> None:
        if len(self.members) < 2:
            raise ValueError("a synonym group needs at least two members")


@dataclass(frozen=True, slots=True)
class RewriteSchema:
    kind: str
    """Derivation kind the schema applies to (`action-noun`, `agent-noun`, `verb`, ...)."""
    from_pattern: tuple[DependencyPattern, ...]
    to_pattern: tuple[DependencyPattern, ...]

    def __str__(self) -> str:
        return f"{format_patterns(self.from_pattern)} ==> {format_patterns(self.to_pattern)}"


class SenseDictionary:
    """Immutable sense dictionary keyed by `(lemma, pos)`."""

    __slots__ = ("_by_lemma", "_entries")

    def __init__(self, entries: Iterable[SenseEntry] = ()) -> None:
        grouped = dict[Headword, list[SenseEntry]]()

        for entry in entries:
            grouped.setdefault((entry.lemma, entry.pos), []).append(entry)

        self._entries = {k: tuple(sorted(v, key=lambda e: e.sense_id)) for k, v in grouped.items()}
        self._by_lemma = dict[str, list[Headword]]()

        for key in self._entries:
            self._by_lemma.setdefault(key[0], []).append(key)

    def __contains__(self, key: object) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[Headword]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        return self._entries == other._entries if isinstance(other, SenseDictionary) else NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} headwords)"

    def senses(self, lemma: str, pos: Pos) -> tuple[SenseEntry, ...]:
        """All senses of a headword, in sense order. Empty for unknown headwords."""
        return self._entries.get((lemma, pos), ())

    def sense(self, lemma: str, pos: Pos, sense_id: int) -> SenseEntry:
        """
        Raises:
            UnknownSenseError: The triple is not in the dictionary.
        """
        for entry in self.senses(lemma, pos):
            if entry.sense_id == sense_id:
                return entry

        raise UnknownSenseError(lemma, pos, sense_id)

    def headwords(self, lemma: str) -> list[Headword]:
        return self._by_lemma.get(lemma, [])

    def entries(self) -> Iterator[SenseEntry]:
        for senses in self._entries.values():
            yield from senses
