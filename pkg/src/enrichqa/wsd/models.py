from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ..enums import Pos
from ..syntax.patterns import PIVOT, WILDCARD, DependencyPattern, is_variable

__all__ = ["DisambRule", "RuleSet", "SenseAssignment", "specificity_of"]


def specificity_of(pattern: DependencyPattern) -> int:
    """Number of literal slots other than the target."""
    return sum(1 for s in pattern.slots if s != PIVOT and s != WILDCARD and not is_variable(s))


@dataclass(frozen=True, slots=True)
class DisambRule:
    """`pattern` selects sense `sense_id` of `(lemma, pos)` at its `$X` slot."""

    lemma: str
    pos: Pos
    pattern: DependencyPattern
    sense_id: int

    @property
    def specificity(self) -> int:
        return specificity_of(self.pattern)

    def __str__(self) -> str:
        return f"{self.lemma} : {self.pattern.substitute({PIVOT: self.lemma})} ==> sens {self.sense_id}"


class RuleSet:
    __slots__ = ("_by_headword", "rules")

    def __init__(self, rules: Iterable[DisambRule] = ()) -> None:
        self.rules = tuple(dict.fromkeys(rules))
        self._by_headword = dict[tuple[str, Pos], list[DisambRule]]()

        for rule in self.rules:
            self._by_headword.setdefault((rule.lemma, rule.pos), []).append(rule)

    def __iter__(self) -> Iterator[DisambRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def for_headword(self, lemma: str, pos: Pos) -> list[DisambRule]:
        return self._by_headword.get((lemma, pos), [])


@dataclass(frozen=True, slots=True)
class SenseAssignment:
    token: int
    """Sentence position of the disambiguated occurrence."""
    lemma: str
    pos: Pos
    sense_id: int
    sem_class: str
    domain: str

    @property
    def traits(self) -> tuple[str, str]:
        return self.sem_class, self.domain
