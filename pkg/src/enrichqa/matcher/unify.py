from __future__ import annotations

from logging import getLogger

from ..enums import Origin, Pos
from ..expansion import EnrichedDependency, EnrichedSlot
from ..lexicon import SenseDictionary, trait_set
from ..question import Focus
from ..syntax import VARIABLE, Dependency, Grammar, Slot
from .models import SlotEvidence

__all__ = ["features_compatible", "focus_evidence", "unify_dependency"]

logger = getLogger(__name__)


def features_compatible(a: frozenset[object], b: frozenset[object]) -> bool:
    return a <= b or b <= a


def focus_evidence(focus: Focus | None, slot: EnrichedSlot, dictionary: SenseDictionary) -> SlotEvidence | None:
    """
    Whether the original lemma of `slot` may fill the focus.

    The binding must share a trait with the focus constraints (an empty constraint set admits anything), or,
    for `quel X` questions, X must be the lemma itself or one of its alternates.
    """
    value = slot.original
    direct = SlotEvidence(VARIABLE, value, slot.origin, slot.origin is Origin.ORIGINAL)

    if focus is None or not focus.traits or trait_set(value, slot.pos, dictionary) & focus.traits:
        return direct

    if focus.lemma is not None:
        if focus.lemma == value:
            return direct
        if (origin := slot.origin_of(focus.lemma)) is not None:
            return SlotEvidence(VARIABLE, focus.lemma, origin, False)

    return None


def _literal_evidence(query: Slot, slot: EnrichedSlot, grammar: Grammar | None) -> SlotEvidence | None:
    if query.pos is Pos.PREP and grammar is not None:
        matched = next((lemma for lemma in slot.lemmas if grammar.same_preposition(query.lemma, lemma)), None)
    else:
        matched = query.lemma if query.lemma in slot.lemmas else None

    if matched is None:
        return None

    origin = slot.origin_of(matched)
    assert origin is not None

    return SlotEvidence(query.lemma, matched, origin, matched == slot.original and origin is Origin.ORIGINAL)


def unify_dependency(
    qdep: Dependency,
    edep: EnrichedDependency,
    focus: Focus | None = None,
    dictionary: SenseDictionary | None = None,
    grammar: Grammar | None = None,
    bound: str | None = None,
) -> tuple[str | None, tuple[SlotEvidence, ...]] | None:
    """
    Unify a question dependency with an enriched dependency.

    Names must be equal and the feature sets comparable by inclusion (`NMOD[SPRED]` unifies with `NMOD`). Literal
    slots match the original lemma or an alternate, prepositions by their equivalence class in `grammar`. The
    focus variable binds to the slot's original lemma, which must agree with `bound` when given.

    Returns:
        The focus binding (`None` when `qdep` has no variable) and per-slot evidence, or `None`.
    """
    if qdep.name != edep.name or len(qdep.slots) != len(edep.slots):
        return None

    if not features_compatible(qdep.features, edep.features):
        return None

    binding = bound
    evidence = list[SlotEvidence]()

    for query, slot in zip(qdep.slots, edep.slots):
        if query.lemma == VARIABLE:
            if binding is not None and slot.original != binding:
                return None

            if dictionary is None:
                found = SlotEvidence(VARIABLE, slot.original, slot.origin, slot.origin is Origin.ORIGINAL)
            elif (found := focus_evidence(focus, slot, dictionary)) is None:
                return None

            binding = slot.original
        elif (found := _literal_evidence(query, slot, grammar)) is None:
            return None

        evidence.append(found)

    return binding, tuple(evidence)
