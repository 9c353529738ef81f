"""Dictionary-driven word-sense disambiguation."""

from .applier import apply_rules, fires
from .compiler import compile_rules, dump_rules, format_rule, rules_from_dependency
from .models import DisambRule, RuleSet, SenseAssignment

__all__ = [
    "DisambRule",
    "RuleSet",
    "SenseAssignment",
    "apply_rules",
    "compile_rules",
    "dump_rules",
    "fires",
    "format_rule",
    "rules_from_dependency",
]
