from __future__ import annotations

from collections.abc import Iterable
from logging import getLogger

from ..enums import Origin, Pos
from ..logging import VERBOSE
from .models import Derivative, SenseDictionary, SynonymGroup

__all__ = [
    "SynonymIndex",
    "all_synonyms",
    "derivatives_of",
    "sense_filtered_synonyms",
    "trait_set",
]

logger = getLogger(__name__)


class SynonymIndex:
    """Member lookup over unsensed synonym groups."""

    __slots__ = ("_by_member", "groups")

    def __init__(self, groups: Iterable[SynonymGroup] = ()) -> None:
        self.groups = tuple(groups)
        self._by_member = dict[str, list[SynonymGroup]]()

        for group in self.groups:
            for member in group.members:
                self._by_member.setdefault(member, []).append(group)

    def __len__(self) -> int:
        return len(self.groups)

    def partners(self, lemma: str) -> set[str]:
        """Every lemma sharing at least one group with `lemma`."""
        return {m for g in self._by_member.get(lemma, ()) for m in g.members} - {lemma}


def sense_filtered_synonyms(
    lemma: str, pos: Pos, sense_id: int, dictionary: SenseDictionary, groups: SynonymIndex
) -> dict[str, Origin]:
    """
    Synonyms admitted for one sense of a headword.

    The parasynonyms of the sense are always kept. An external synonym is kept when it is a headword of the same
    part of speech with a sense whose semantic class and domain both equal those of the given sense.

    Returns:
        The admitted lemmas, tagged with where they come from. Parasynonyms win over external synonyms.

    Raises:
        UnknownSenseError: The triple is not in the dictionary.
    """
    sense = dictionary.sense(lemma, pos, sense_id)

    admitted = dict.fromkeys(sorted(sense.parasynonyms - {lemma}), Origin.PARASYNONYM)

    for candidate in sorted(groups.partners(lemma)):
        if candidate in admitted:
            continue

        if any(s.traits == sense.traits for s in dictionary.senses(candidate, pos)):
            admitted[candidate] = Origin.EXTERNAL
        else:
            logger.log(VERBOSE, "Rejected %s for %s: no sense with traits %s", candidate, sense.label, sense.traits)

    return admitted


def all_synonyms(lemma: str, pos: Pos, dictionary: SenseDictionary, groups: SynonymIndex) -> dict[str, Origin]:
    """Parasynonyms of every sense plus every external synonym, with no semantic check."""
    admitted = dict[str, Origin]()

    for sense in dictionary.senses(lemma, pos):
        admitted.update(dict.fromkeys(sorted(sense.parasynonyms - {lemma}), Origin.PARASYNONYM))

    for candidate in sorted(groups.partners(lemma)):
        admitted.setdefault(candidate, Origin.EXTERNAL)

    return admitted


def derivatives_of(lemma: str, pos: Pos, sense_id: int, dictionary: SenseDictionary) -> frozenset[Derivative]:
    """
    Raises:
        UnknownSenseError: The triple is not in the dictionary.
    """
    return dictionary.sense(lemma, pos, sense_id).derivatives


def trait_set(lemma: str, pos: Pos, dictionary: SenseDictionary) -> frozenset[str]:
    """Union of the semantic classes and domains over all senses of a headword."""
    return frozenset(t for s in dictionary.senses(lemma, pos) for t in s.traits)
