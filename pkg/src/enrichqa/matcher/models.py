from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..enums import Origin
from ..expansion import EnrichedDependency
from ..index import UnitRef
from ..syntax import Dependency
from ..syntax.models import display

__all__ = ["Evidence", "MatchResult", "SlotEvidence"]


class SlotEvidence(NamedTuple):
    query: str
    """Question lemma, `$VAR` for the focus."""
    matched: str
    """Document lemma the slot was satisfied by."""
    origin: Origin
    original: bool
    """The match used the slot's original lemma as read from the text."""


@dataclass(frozen=True, slots=True)
class Evidence:
    """How one question dependency was satisfied inside a unit."""

    question: Dependency
    record: int
    """Index of the sentence record in the index."""
    position: int
    """Index of the dependency inside the record."""
    dependency: EnrichedDependency
    slots: tuple[SlotEvidence, ...]

    @property
    def originals(self) -> int:
        return sum(s.original for s in self.slots)

    @property
    def alternates(self) -> int:
        return len(self.slots) - self.originals

    def render(self) -> str:
        return f"{self.question} ~ {self.dependency.render(tagged=True)}"


@dataclass(frozen=True, slots=True)
class MatchResult:
    unit: UnitRef
    text: str
    binding: str | None
    """Document lemma bound to the focus, `None` for questions without one."""
    companions: tuple[str, ...]
    """Proper names attached to the bound noun by `NN`."""
    evidence: tuple[Evidence, ...]
    """One entry per question dependency, in question order."""
    score_key: tuple[int, int, int]
    """`(-original slot matches, -alternate slot matches, corpus position)`, smaller is better."""

    @property
    def answer(self) -> str:
        if self.binding is None:
            return ""
        name = display(self.binding)
        return f"{name} ({', '.join(self.companions)})" if self.companions else name
