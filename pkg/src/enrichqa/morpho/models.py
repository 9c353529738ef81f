from __future__ import annotations

from dataclasses import dataclass, field

from ..enums import Pos

__all__ = ["MorphReading", "Token"]


@dataclass(frozen=True, slots=True)
class MorphReading:
    """One morphological analysis of a surface form."""

    lemma: str
    pos: Pos
    features: frozenset[str] = frozenset()
    """Number, gender, tense and capitalization symbols (`sg`, `fem`, `past`, `cap`, ...)."""
    contracted: str | None = None
    """Article folded into an amalgam (`des` = `de` + `les`)."""

    def __post_init__(self) -> None:
        if not self.lemma:
            raise ValueError("A reading needs a non-empty lemma")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    span: tuple[int, int]
    """Character offsets `[start, end)` into the tokenized text."""
    sentence_id: int
    position: int
    """Index of the token inside its sentence."""
    readings: tuple[MorphReading, ...] = field(default=(), compare=True)
    selected: int | None = None

    @property
    def reading(self) -> MorphReading:
        if self.selected is None:
            raise ValueError(f"Token {self.surface!r} has not been tagged")
        return self.readings[self.selected]

    @property
    def lemma(self) -> str:
        return self.reading.lemma

    @property
    def pos(self) -> Pos:
        return self.reading.pos

    @property
    def pos_set(self) -> frozenset[Pos]:
        return frozenset(r.pos for r in self.readings)
