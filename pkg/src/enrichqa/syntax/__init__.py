"""Chunking and rule-based dependency extraction."""

from .chunker import chunk, extract_dependencies, find_head
from .grammar import DependencyRule, Grammar
from .models import VARIABLE, Chunk, Dependency, Slot
from .patterns import DependencyPattern, format_patterns, parse_pattern, parse_patterns

__all__ = [
    "VARIABLE",
    "Chunk",
    "Dependency",
    "DependencyPattern",
    "DependencyRule",
    "Grammar",
    "Slot",
    "chunk",
    "extract_dependencies",
    "find_head",
    "format_patterns",
    "parse_pattern",
    "parse_patterns",
]
