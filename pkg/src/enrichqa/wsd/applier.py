from __future__ import annotations

from collections.abc import Sequence
from logging import getLogger

from ..enums import Pos
from ..lexicon import SenseDictionary
from ..logging import VERBOSE
from ..syntax import Dependency
from ..syntax.patterns import PIVOT, WILDCARD, is_variable
from .models import DisambRule, RuleSet, SenseAssignment

__all__ = ["apply_rules", "fires"]

logger = getLogger(__name__)


def fires(rule: DisambRule, dep: Dependency, position: int) -> bool:
    """Whether `rule` unifies with `dep` with its target on the token at `position`."""
    pattern = rule.pattern

    if (dep.name, dep.features, len(dep.slots)) != (pattern.name, pattern.features, len(pattern.slots)):
        return False

    for term, slot in zip(pattern.slots, dep.slots):
        if term == PIVOT:
            if slot.token != position or (slot.lemma, slot.pos) != (rule.lemma, rule.pos):
                return False
        elif term != WILDCARD and not is_variable(term) and term != slot.lemma:
            return False

    return True


def apply_rules(deps: Sequence[Dependency], rules: RuleSet, dictionary: SenseDictionary) -> list[SenseAssignment]:
    """
    Assign at most one sense to every headword occurrence appearing in `deps`.

    Among the rules that fire, the most specific wins, then the lowest sense number. With no rule firing a
    monosemous headword gets its only sense and a polysemous one stays unassigned.
    """
    occurrences = dict[int, tuple[str, Pos]]()

    for dep in deps:
        for slot in dep.slots:
            if slot.token is not None:
                occurrences.setdefault(slot.token, (slot.lemma, slot.pos))

    assignments = list[SenseAssignment]()

    for position, (lemma, pos) in sorted(occurrences.items()):
        if not (senses := dictionary.senses(lemma, pos)):
            continue

        fired = [r for r in rules.for_headword(lemma, pos) if any(fires(r, d, position) for d in deps)]

        if fired:
            best = min(fired, key=lambda r: (-r.specificity, r.sense_id))
            sense = dictionary.sense(lemma, pos, best.sense_id)
            logger.log(VERBOSE, "%s@%d: %s", lemma, position, best)
        elif len(senses) == 1:
            sense = senses[0]
        else:
            logger.log(VERBOSE, "%s@%d left unassigned (%d senses, no rule)", lemma, position, len(senses))
            continue

        assignments.append(
            SenseAssignment(position, lemma, pos, sense.sense_id, sense.sem_class, sense.domain)
        )

    return assignments
