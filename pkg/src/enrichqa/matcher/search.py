from __future__ import annotations

from collections.abc import Sequence
from logging import getLogger

from jetpytools import fallback

from ..enums import Granularity, Relation
from ..expansion import EnrichedSlot
from ..index import CorpusIndex, UnitRef, is_stop_slot
from ..question import LocalStructure
from ..resources import LexicalResources
from ..syntax import VARIABLE
from .models import Evidence, MatchResult
from .unify import unify_dependency

__all__ = ["match", "match_unit"]

logger = getLogger(__name__)


def _candidates(
    local: LocalStructure, index: CorpusIndex, granularity: Granularity, copulas: frozenset[str]
) -> set[UnitRef] | None:
    """Units holding every literal content lemma of the question, `None` when it has none."""
    lemmas = {
        slot.lemma
        for dep in local.dependencies
        for slot in dep.slots
        if not is_stop_slot(EnrichedSlot.lift(slot), copulas)
    }

    if not lemmas:
        return None

    units = [index.lookup(lemma, granularity) for lemma in sorted(lemmas)]

    return set.intersection(*units)


def _best(
    local: LocalStructure, index: CorpusIndex, records: Sequence[int], resources: LexicalResources, bound: str | None
) -> list[Evidence] | None:
    chosen = list[Evidence]()

    for qdep in local.dependencies:
        best: Evidence | None = None

        for i in records:
            for j, edep in enumerate(index.records[i].dependencies):
                unified = unify_dependency(
                    qdep, edep, local.focus, resources.dictionary, resources.grammar, bound
                )

                if unified is None:
                    continue

                found = Evidence(qdep, i, j, edep, unified[1])

                if best is None or (found.originals, found.alternates) > (best.originals, best.alternates):
                    best = found

        if best is None:
            return None

        chosen.append(best)

    return chosen


def _companions(index: CorpusIndex, evidence: Sequence[Evidence], records: Sequence[int]) -> tuple[str, ...]:
    for ev in evidence:
        for k, query in enumerate(ev.question.slots):
            if query.lemma != VARIABLE:
                continue

            token = ev.dependency.slots[k].token

            if token is None:
                continue

            return tuple(
                dep.slots[1].original
                for dep in index.records[ev.record].dependencies
                if dep.name is Relation.NN and dep.slots[0].token == token
            )

    return ()


def match_unit(
    local: LocalStructure, index: CorpusIndex, unit: UnitRef, records: Sequence[int], resources: LexicalResources
) -> MatchResult | None:
    """The best way every question dependency is satisfied inside one unit, if any."""
    if local.focus.host:
        values = dict.fromkeys(
            slot.original for i in records for dep in index.records[i].dependencies for slot in dep.slots
        )
    else:
        values = {None: None}

    best: tuple[tuple[int, int], str | None, list[Evidence]] | None = None

    for value in values:
        if (evidence := _best(local, index, records, resources, value)) is None:
            continue

        counts = (sum(e.originals for e in evidence), sum(e.alternates for e in evidence))

        if best is None or counts > best[0]:
            best = (counts, value, evidence)

    if best is None:
        return None

    (originals, alternates), binding, evidence = best

    return MatchResult(
        unit,
        " ".join(index.records[i].text for i in records),
        binding,
        _companions(index, evidence, records) if binding is not None else (),
        tuple(evidence),
        (-originals, -alternates, records[0]),
    )


def match(
    local: LocalStructure,
    index: CorpusIndex,
    resources: LexicalResources,
    granularity: Granularity | None = None,
    limit: int | None = None,
    prefilter: bool = True,
) -> list[MatchResult]:
    """
    Units satisfying every dependency of a question, best first.

    Units must hold all literal content lemmas of the question in their postings before they are unified.
    Results are ordered by `MatchResult.score_key` and cut to `limit` (the index's `max_answers` by default).
    """
    granularity = fallback(granularity, index.settings.granularity)
    limit = fallback(limit, index.settings.max_answers)

    units = index.units(granularity)
    candidates = _candidates(local, index, granularity, resources.grammar.copulas) if prefilter else None

    results = list[MatchResult]()

    for unit, records in units.items():
        if candidates is not None and unit not in candidates:
            continue

        if (result := match_unit(local, index, unit, records, resources)) is not None:
            results.append(result)

    results.sort(key=lambda r: r.score_key)

    logger.debug(
        "%r: %d matching %s units out of %d", local.text, len(results), granularity, len(candidates or units)
    )

    return results[:limit]
