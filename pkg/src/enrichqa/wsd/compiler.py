from __future__ import annotations

from logging import getLogger

from ..enums import Pos
from ..errors import PatternSyntaxError
from ..lexicon import SenseDictionary, SenseEntry
from ..logging import VERBOSE
from ..pipeline import AnalysisPipeline
from ..syntax import Dependency
from ..syntax.patterns import PIVOT, DependencyPattern, parse_pattern
from .models import DisambRule, RuleSet

__all__ = ["compile_rules", "dump_rules", "format_rule", "rules_from_dependency"]

logger = getLogger(__name__)


def rules_from_dependency(entry: SenseEntry, dep: Dependency) -> DisambRule | None:
    """
    Turn one example dependency into a rule for `entry`.

    The headword occurrence becomes the target. Other slots stay literal when they are content words or
    prepositions; any other slot (a pronoun subject, a determiner) discards the dependency.
    """
    targets = [i for i, s in enumerate(dep.slots) if (s.lemma, s.pos) == (entry.lemma, entry.pos)]

    if len(targets) != 1:
        return None

    terms = list[str]()

    for i, slot in enumerate(dep.slots):
        if i == targets[0]:
            terms.append(PIVOT)
        elif slot.pos is Pos.PREP or slot.pos.is_content:
            terms.append(slot.lemma)
        else:
            return None

    return DisambRule(entry.lemma, entry.pos, DependencyPattern(dep.name, dep.features, tuple(terms)), entry.sense_id)


def compile_rules(dictionary: SenseDictionary, pipeline: AnalysisPipeline) -> RuleSet:
    """
    Compile disambiguation rules from the examples and explicit schemas of every sense.

    Examples giving no usable dependency on their headword are skipped with a warning.
    """
    rules = list[DisambRule]()

    for entry in dictionary.entries():
        for example in entry.examples:
            found = [
                rule
                for sentence in pipeline.parse(example)
                for dep in sentence.dependencies
                if (rule := rules_from_dependency(entry, dep)) is not None
            ]

            if not found:
                logger.warning("Skipped example %r of %s: no dependency on the headword", example, entry.label)

            rules.extend(found)

        for schema in entry.schemas:
            try:
                pattern = parse_pattern(schema)
            except PatternSyntaxError:
                logger.warning("Skipped invalid schema %r of %s", schema, entry.label)
                continue

            rules.append(DisambRule(entry.lemma, entry.pos, pattern, entry.sense_id))

    ruleset = RuleSet(rules)

    logger.info("Compiled %d disambiguation rules", len(ruleset))
    logger.log(VERBOSE, "Rules:\n%s", lambda: "\n".join(dump_rules(ruleset)))

    return ruleset


def format_rule(rule: DisambRule) -> str:
    return str(rule)


def dump_rules(rules: RuleSet) -> list[str]:
    """One line per rule, as `lemma : PATTERN ==> sens N`."""
    return [format_rule(r) for r in rules]
