from __future__ import annotations

from collections.abc import Iterator, Mapping
from logging import getLogger
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from ..enums import Pos
from ..utils import validate_records
from .models import MorphReading

__all__ = ["FullFormLexicon", "load_fullform_lexicon"]

logger = getLogger(__name__)


class ReadingRecord(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    lemma: str = Field(min_length=1)
    pos: Pos
    features: list[str] = []
    contracted: str | None = None


class FullFormRecord(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    surface: str = Field(min_length=1)
    readings: list[ReadingRecord] = Field(min_length=1)


class FullFormLexicon(Mapping[str, tuple[MorphReading, ...]]):
    """Surface form to readings table."""

    __slots__ = ("_table",)

    def __init__(self, table: Mapping[str, tuple[MorphReading, ...]] | None = None) -> None:
        self._table = dict(table or {})

    def __getitem__(self, surface: str) -> tuple[MorphReading, ...]:
        return self._table[surface]

    def __iter__(self) -> Iterator[str]:
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def lookup(self, surface: str) -> tuple[MorphReading, ...]:
        """Readings of the exact surface, else of its lowercase form. Empty when unknown."""
        if readings := self._table.get(surface):
            return readings
        return self._table.get(surface.lower(), ())


def load_fullform_lexicon(path: Path) -> FullFormLexicon:
    """
    Raises:
        DataFormatError: The file does not parse.
    """
    table = dict[str, tuple[MorphReading, ...]]()

    for _, record in validate_records(path, FullFormRecord):
        known = table.get(record.surface, ())
        readings = [MorphReading(r.lemma, r.pos, frozenset(r.features), r.contracted) for r in record.readings]

        # Repeated surfaces accumulate readings
        table[record.surface] = known + tuple(r for r in readings if r not in known)

    logger.debug("Loaded %d surface forms from %s", len(table), path)

    return FullFormLexicon(table)
