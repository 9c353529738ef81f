from __future__ import annotations

from collections.abc import Iterator, Sequence
from logging import getLogger

from ..enums import Feature, Origin, Pos, Provenance
from ..lexicon import Derivative, RewriteSchema, SenseDictionary
from ..logging import VERBOSE
from ..syntax.patterns import DERIVED, PIVOT, WILDCARD, DependencyPattern, is_variable
from ..wsd import SenseAssignment
from .models import EnrichedDependency, EnrichedSlot

__all__ = ["apply_derivation_rewrites", "match_schema"]

logger = getLogger(__name__)

type Binding = dict[str, EnrichedSlot]


def _bind(pattern: DependencyPattern, dep: EnrichedDependency, pivot: int, binding: Binding) -> Binding | None:
    if (dep.name, dep.features, len(dep.slots)) != (pattern.name, pattern.features, len(pattern.slots)):
        return None

    bound = dict(binding)

    for term, slot in zip(pattern.slots, dep.slots):
        if term == PIVOT:
            if slot.token != pivot:
                return None
        elif is_variable(term):
            if term in bound and (bound[term].original, bound[term].token) != (slot.original, slot.token):
                return None
            bound[term] = slot
        elif term != WILDCARD and term != slot.original:
            return None

    return bound


def match_schema(
    patterns: Sequence[DependencyPattern], deps: Sequence[EnrichedDependency], pivot: int
) -> Iterator[tuple[Binding, tuple[int, ...]]]:
    """
    Every assignment of the source patterns to distinct dependencies sharing the pivot token.

    Yields the variable bindings and the indices of the dependencies used.
    """

    def walk(i: int, binding: Binding, used: tuple[int, ...]) -> Iterator[tuple[Binding, tuple[int, ...]]]:
        if i == len(patterns):
            yield binding, used
            return

        for j, dep in enumerate(deps):
            if j not in used and (bound := _bind(patterns[i], dep, pivot, binding)) is not None:
                yield from walk(i + 1, bound, (*used, j))

    yield from walk(0, {}, ())


def _instantiate(
    pattern: DependencyPattern, binding: Binding, derivative: Derivative, pivot: int, sources: tuple[int, ...]
) -> EnrichedDependency:
    slots = list[EnrichedSlot]()

    for i, term in enumerate(pattern.slots):
        if term == DERIVED:
            slots.append(EnrichedSlot(derivative.lemma, derivative.pos, pivot, origin=Origin.DERIVATION))
        elif is_variable(term):
            slots.append(binding[term])
        else:
            pos = Pos.PREP if Feature.INDIR in pattern.features and i == 1 else Pos.NOUN
            slots.append(EnrichedSlot(term, pos, None, origin=Origin.DERIVATION))

    return EnrichedDependency(pattern.name, pattern.features, tuple(slots), Provenance.DERIVED, sources)


def _key(dep: EnrichedDependency) -> tuple[object, ...]:
    return dep.name, dep.features, tuple((s.original, s.token) for s in dep.slots)


def apply_derivation_rewrites(
    deps: Sequence[EnrichedDependency],
    assignments: Sequence[SenseAssignment],
    dictionary: SenseDictionary,
    schemas: Sequence[RewriteSchema],
) -> list[EnrichedDependency]:
    """
    Dependencies rewritten around the derivatives of disambiguated occurrences.

    For every assigned occurrence, derivative of its sense and schema of the derivative's kind, each way the
    schema's source patterns match dependencies at that occurrence emits the target patterns, with `$D` the
    derivative and the other variables copied from the matched slots along with their alternates.

    Returns:
        Only the added dependencies, each recording the indices of the dependencies it came from.
    """
    by_kind = dict[str, list[RewriteSchema]]()

    for schema in schemas:
        by_kind.setdefault(schema.kind, []).append(schema)

    originals = [d for d in deps if d.provenance is Provenance.ORIGINAL]
    seen = {_key(d) for d in originals}
    added = list[EnrichedDependency]()

    for a in assignments:
        for derivative in sorted(dictionary.sense(a.lemma, a.pos, a.sense_id).derivatives):
            for schema in by_kind.get(derivative.kind, []):
                for binding, used in match_schema(schema.from_pattern, originals, a.token):
                    for pattern in schema.to_pattern:
                        dep = _instantiate(pattern, binding, derivative, a.token, used)

                        if _key(dep) in seen:
                            continue

                        seen.add(_key(dep))
                        added.append(dep)
                        logger.log(VERBOSE, "%s -> %s (%s)", a.lemma, dep, schema.kind)

    return added
