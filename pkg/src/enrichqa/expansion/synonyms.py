from __future__ import annotations

from collections.abc import Sequence
from logging import getLogger

from ..enums import Origin, Pos
from ..lexicon import SenseDictionary, SynonymIndex, all_synonyms, sense_filtered_synonyms
from ..settings import PipelineSettings
from ..syntax import VARIABLE, Dependency, Slot
from ..wsd import SenseAssignment
from .models import Alternate, EnrichedDependency, EnrichedSlot

__all__ = ["enrich_with_synonyms"]

logger = getLogger(__name__)


def _alternates(admitted: dict[str, Origin]) -> tuple[Alternate, ...]:
    return tuple(Alternate(lemma, origin) for lemma, origin in sorted(admitted.items()))


def _widen(
    slot: Slot,
    assigned: dict[int, SenseAssignment],
    dictionary: SenseDictionary,
    groups: SynonymIndex,
    sense_filter: bool,
) -> EnrichedSlot:
    if slot.lemma == VARIABLE or not slot.pos.is_content or slot.pos is Pos.NUM:
        return EnrichedSlot.lift(slot)

    if not sense_filter:
        admitted = all_synonyms(slot.lemma, slot.pos, dictionary, groups)
    elif slot.token is not None and (a := assigned.get(slot.token)):
        admitted = sense_filtered_synonyms(a.lemma, a.pos, a.sense_id, dictionary, groups)
    else:
        return EnrichedSlot.lift(slot)

    admitted.pop(slot.lemma, None)

    return EnrichedSlot(slot.lemma, slot.pos, slot.token, _alternates(admitted))


def enrich_with_synonyms(
    deps: Sequence[Dependency],
    assignments: Sequence[SenseAssignment],
    dictionary: SenseDictionary,
    groups: SynonymIndex,
    settings: PipelineSettings,
) -> list[EnrichedDependency]:
    """
    Widen every slot into a disjunction of its lemma and synonyms. The number of dependencies is unchanged.

    With the sense filter on, only occurrences holding a sense assignment are widened, with the synonyms of
    that sense. With it off, every content slot takes the parasynonyms of all senses and all external
    synonyms. With synonyms disabled the dependencies are lifted unchanged.
    """
    if not settings.synonyms:
        return [EnrichedDependency.lift(d) for d in deps]

    assigned = {a.token: a for a in assignments}

    return [
        EnrichedDependency(
            dep.name,
            dep.features,
            tuple(_widen(s, assigned, dictionary, groups, settings.sense_filter) for s in dep.slots),
        )
        for dep in deps
    ]
