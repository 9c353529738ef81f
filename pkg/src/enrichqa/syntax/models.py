from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..enums import ChunkKind, Feature, Pos, Relation
from ..morpho.models import Token
from .patterns import render_dependency

__all__ = ["VARIABLE", "Chunk", "Dependency", "Slot"]

VARIABLE = "$VAR"
"""Lemma of the focus placeholder inside question structures."""


def display(lemma: str) -> str:
    return "VAR" if lemma == VARIABLE else lemma


class Slot(NamedTuple):
    lemma: str
    pos: Pos
    token: int | None
    """Position of the source token in its sentence. `None` for literals introduced by a rewrite."""


@dataclass(frozen=True, slots=True)
class Chunk:
    """A minimal phrase over a contiguous run of tokens."""

    kind: ChunkKind
    tokens: tuple[Token, ...]
    head: int
    """Sentence position of the head token."""

    def __post_init__(self) -> None:
        if self.head not in self.token_range:
            raise ValueError(f"head {self.head} outside {self.token_range}")

    @property
    def token_range(self) -> range:
        return range(self.tokens[0].position, self.tokens[-1].position + 1)

    @property
    def head_token(self) -> Token:
        return self.tokens[self.head - self.tokens[0].position]

    def __str__(self) -> str:
        return f"{self.kind}({' '.join(t.surface for t in self.tokens)})"


@dataclass(frozen=True, slots=True)
class Dependency:
    """A labelled relation between chunk heads."""

    name: Relation
    features: frozenset[Feature]
    slots: tuple[Slot, ...]

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(s.lemma for s in self.slots)

    def __str__(self) -> str:
        return render_dependency(self.name, self.features, (display(s.lemma) for s in self.slots))
