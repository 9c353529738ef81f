from __future__ import annotations

from dataclasses import dataclass

from ..enums import FocusKind, Pos
from ..syntax import Dependency

__all__ = ["Focus", "LocalStructure"]


@dataclass(frozen=True, slots=True)
class Focus:
    """The sought element of a question, kept as trait constraints (and a literal lemma for `quel X`)."""

    kind: FocusKind
    traits: frozenset[str] = frozenset()
    """Semantic classes or domains a binding must share. Empty means unconstrained."""
    lemma: str | None = None
    pos: Pos | None = None
    word: str = ""
    """The interrogative word as written."""
    host: tuple[tuple[int, int], ...] = ()
    """(dependency, slot) positions of the focus variable."""

    def __post_init__(self) -> None:
        if self.kind is FocusKind.EXPLICIT and self.lemma is None:
            raise ValueError("an explicit-word focus needs a lemma")


@dataclass(frozen=True, slots=True)
class LocalStructure:
    text: str
    dependencies: tuple[Dependency, ...]
    focus: Focus

    def __str__(self) -> str:
        return ", ".join(str(d) for d in self.dependencies)
