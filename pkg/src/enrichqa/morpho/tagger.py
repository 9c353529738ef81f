from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace
from logging import getLogger

from pydantic import BaseModel, ConfigDict, Field

from ..enums import Pos
from ..logging import VERBOSE
from .models import Token

__all__ = ["TagRule", "tag"]

logger = getLogger(__name__)


class TagRule(BaseModel):
    """
    Contextual preference for ambiguous tokens.

    The rule applies when the previous token's selected part of speech is in `prev` and one of the next token's
    readings is in `next` (an empty list places no condition on that side), and the token has a reading in
    `prefer`.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    prev: list[Pos] = []
    next: list[Pos] = []
    prefer: list[Pos] = Field(min_length=1)

    def choose(self, token: Token, prev: Token | None, nxt: Token | None) -> int | None:
        if self.prev and (prev is None or prev.pos not in self.prev):
            return None

        if self.next and (nxt is None or not nxt.pos_set & set(self.next)):
            return None

        for pos in self.prefer:
            for i, reading in enumerate(token.readings):
                if reading.pos is pos:
                    return i

        return None


def tag(sentence: Sequence[Token], rules: Sequence[TagRule]) -> list[Token]:
    """
    Select one reading per token, left to right.

    Single-reading tokens keep their reading. Ambiguous ones take the choice of the first applicable rule,
    else their first reading.
    """
    tagged = list[Token]()

    for i, token in enumerate(sentence):
        if not token.readings:
            raise ValueError(f"Token {token.surface!r} was not analyzed")

        selected = 0

        if len(token.readings) > 1:
            prev = tagged[-1] if tagged else None
            nxt = sentence[i + 1] if i + 1 < len(sentence) else None

            for rule in rules:
                if (choice := rule.choose(token, prev, nxt)) is not None:
                    logger.log(VERBOSE, "%s: %r -> %s", rule.name, token.surface, token.readings[choice].pos)
                    selected = choice
                    break

        tagged.append(replace(token, selected=selected))

    return tagged
