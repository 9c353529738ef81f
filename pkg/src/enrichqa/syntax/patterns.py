"""
Surface syntax of dependency patterns: `NAME[FEAT,...](slot,slot[,slot])`.

Slots are literal lemmas or terms:

- `$X`: the pivot (the headword of a rule, the derivation source of a schema)
- `$D`: the derived form of a rewrite schema
- `$A`..`$Z`: variables bound across the dependencies of one pattern
- `*`: anything

Several dependencies are joined with ` + `.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..enums import Feature, Relation
from ..errors import PatternSyntaxError

__all__ = [
    "DERIVED",
    "PIVOT",
    "WILDCARD",
    "DependencyPattern",
    "check_shape",
    "format_patterns",
    "is_variable",
    "parse_pattern",
    "parse_patterns",
    "render_dependency",
    "sort_features",
]

PIVOT = "$X"
DERIVED = "$D"
WILDCARD = "*"

_PATTERN_RE = re.compile(r"^(?P<name>[A-Z]+)(?:\[(?P<features>[^\]]*)\])?\((?P<slots>[^()]*)\)$")
_VARIABLE_RE = re.compile(r"^\$[A-Z]$")


def is_variable(term: str) -> bool:
    return _VARIABLE_RE.match(term) is not None


def sort_features(features: Iterable[Feature]) -> list[Feature]:
    order = list(Feature)
    return sorted(features, key=order.index)


def render_dependency(name: str, features: Iterable[Feature], slots: Iterable[str]) -> str:
    feats = ",".join(sort_features(features))
    args = ",".join(slots)
    return f"{name}[{feats}]({args})" if feats else f"{name}({args})"


@dataclass(frozen=True, slots=True)
class DependencyPattern:
    name: Relation
    features: frozenset[Feature]
    slots: tuple[str, ...]

    def __str__(self) -> str:
        return render_dependency(self.name, self.features, self.slots)

    def count(self, term: str) -> int:
        return self.slots.count(term)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(s for s in self.slots if is_variable(s))

    @property
    def literals(self) -> tuple[str, ...]:
        return tuple(s for s in self.slots if s != WILDCARD and not is_variable(s))

    def substitute(self, mapping: dict[str, str]) -> DependencyPattern:
        return DependencyPattern(self.name, self.features, tuple(mapping.get(s, s) for s in self.slots))


def check_shape(name: Relation, features: frozenset[Feature], arity: int) -> str | None:
    """Return why a (name, features, arity) triple is not a well-formed dependency, if it is not."""
    if arity not in (2, 3):
        return f"expected 2 or 3 slots, got {arity}"

    if name is Relation.VARG and len(features & {Feature.DIR, Feature.INDIR}) != 1:
        return "VARG needs exactly one of DIR, INDIR"

    if (Feature.INDIR in features) != (arity == 3):
        return "3 slots are used if and only if INDIR is present"

    return None


def parse_pattern(text: str) -> DependencyPattern:
    """
    Parse one dependency pattern.

    Raises:
        PatternSyntaxError: The text is not a well-formed pattern.
    """
    m = _PATTERN_RE.match(text.strip())

    if not m:
        raise PatternSyntaxError(text, "expected NAME[FEAT,...](slot,...)")

    try:
        name = Relation(m["name"])
    except ValueError:
        raise PatternSyntaxError(text, f"unknown relation {m['name']!r}") from None

    features = set[Feature]()

    if m["features"]:
        for feat in m["features"].split(","):
            try:
                features.add(Feature(feat.strip()))
            except ValueError:
                raise PatternSyntaxError(text, f"unknown feature {feat.strip()!r}") from None

    slots = tuple(s.strip() for s in m["slots"].split(","))

    if any(not s for s in slots):
        raise PatternSyntaxError(text, "empty slot")

    if any(s.startswith("$") and not is_variable(s) for s in slots):
        raise PatternSyntaxError(text, "variables are a '$' followed by one capital letter")

    if reason := check_shape(name, frozenset(features), len(slots)):
        raise PatternSyntaxError(text, reason)

    return DependencyPattern(name, frozenset(features), slots)


def parse_patterns(text: str) -> tuple[DependencyPattern, ...]:
    """Parse one or more patterns joined with `+`."""
    parts = text.split("+")

    if any(not p.strip() for p in parts):
        raise PatternSyntaxError(text, "empty pattern around '+'")

    return tuple(parse_pattern(p) for p in parts)


def format_patterns(patterns: Sequence[DependencyPattern]) -> str:
    return " + ".join(str(p) for p in patterns)
