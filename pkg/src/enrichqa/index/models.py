from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from ..enums import Granularity, Origin
from ..expansion import EnrichedDependency
from ..settings import PipelineSettings
from ..wsd import SenseAssignment

__all__ = ["INDEX_VERSION", "CorpusIndex", "Posting", "SentenceRecord", "UnitRef"]

INDEX_VERSION = 1


class Posting(NamedTuple):
    sentence: int
    """Index of the sentence record."""
    dependency: int
    slot: int
    origin: Origin


class UnitRef(NamedTuple):
    """A document, or a paragraph or sentence (1-based within the document) of it."""

    doc_id: str
    number: int | None = None

    def __str__(self) -> str:
        return self.doc_id if self.number is None else f"{self.doc_id}:{self.number}"


@dataclass(frozen=True, slots=True)
class SentenceRecord:
    doc_id: str
    paragraph: int
    sentence: int
    text: str
    dependencies: tuple[EnrichedDependency, ...]
    assignments: tuple[SenseAssignment, ...] = ()

    def unit(self, granularity: Granularity) -> UnitRef:
        match granularity:
            case Granularity.SENTENCE:
                return UnitRef(self.doc_id, self.sentence)
            case Granularity.PARAGRAPH:
                return UnitRef(self.doc_id, self.paragraph)
            case Granularity.DOCUMENT:
                return UnitRef(self.doc_id)


class CorpusIndex(BaseModel):
    """The enriched structure of a corpus with postings over original and alternate lemmas."""

    model_config = ConfigDict(frozen=True)

    version: int = INDEX_VERSION
    settings: PipelineSettings
    lexicon: str = "bundled"
    """Where the lexical resources came from."""
    records: tuple[SentenceRecord, ...] = ()
    postings: dict[str, tuple[Posting, ...]] = {}

    def lookup(self, lemma: str, granularity: Granularity = Granularity.SENTENCE) -> set[UnitRef]:
        """Units holding at least one posting for `lemma`. Unknown lemmas give an empty set."""
        return {self.records[p.sentence].unit(granularity) for p in self.postings.get(lemma, ())}

    def units(self, granularity: Granularity = Granularity.SENTENCE) -> dict[UnitRef, list[int]]:
        """Every unit in corpus order, with the indices of its sentence records."""
        out = dict[UnitRef, list[int]]()

        for i, record in enumerate(self.records):
            out.setdefault(record.unit(granularity), []).append(i)

        return out
