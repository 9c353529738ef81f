from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..enums import Feature, Origin, Pos, Provenance, Relation
from ..syntax import Dependency, Slot
from ..syntax.models import display
from ..syntax.patterns import render_dependency

__all__ = ["Alternate", "EnrichedDependency", "EnrichedSlot"]


class Alternate(NamedTuple):
    lemma: str
    origin: Origin


@dataclass(frozen=True, slots=True)
class EnrichedSlot:
    """A slot widened into a disjunction of its original lemma and tagged alternates."""

    original: str
    pos: Pos
    token: int | None
    alternates: tuple[Alternate, ...] = ()
    """Sorted by lemma, never containing `original`."""
    origin: Origin = Origin.ORIGINAL
    """How `original` itself entered the structure: read from the text or produced by a rewrite."""

    def __post_init__(self) -> None:
        if any(a.lemma == self.original for a in self.alternates):
            raise ValueError(f"{self.original!r} listed among its own alternates")

    @classmethod
    def lift(cls, slot: Slot) -> EnrichedSlot:
        return cls(slot.lemma, slot.pos, slot.token)

    @property
    def lemmas(self) -> tuple[str, ...]:
        return (self.original, *(a.lemma for a in self.alternates))

    def origin_of(self, lemma: str) -> Origin | None:
        if lemma == self.original:
            return self.origin
        return next((a.origin for a in self.alternates if a.lemma == lemma), None)

    def render(self, tagged: bool = False) -> str:
        def one(lemma: str, origin: Origin) -> str:
            return f"{display(lemma)}<{origin}>" if tagged else display(lemma)

        parts = [one(self.original, self.origin), *(one(a.lemma, a.origin) for a in self.alternates)]

        return parts[0] if len(parts) == 1 else "{" + "|".join(parts) + "}"


@dataclass(frozen=True, slots=True)
class EnrichedDependency:
    name: Relation
    features: frozenset[Feature]
    slots: tuple[EnrichedSlot, ...]
    provenance: Provenance = Provenance.ORIGINAL
    sources: tuple[int, ...] = ()
    """Indices of the original dependencies a rewrite was produced from."""

    @classmethod
    def lift(cls, dep: Dependency) -> EnrichedDependency:
        return cls(dep.name, dep.features, tuple(EnrichedSlot.lift(s) for s in dep.slots))

    def strip(self) -> Dependency:
        """The dependency without alternates."""
        return Dependency(self.name, self.features, tuple(Slot(s.original, s.pos, s.token) for s in self.slots))

    def render(self, tagged: bool = False) -> str:
        return render_dependency(self.name, self.features, (s.render(tagged) for s in self.slots))

    def __str__(self) -> str:
        return self.render()
