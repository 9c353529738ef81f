"""Matching question structures against the enriched index."""

from .models import Evidence, MatchResult, SlotEvidence
from .search import match, match_unit
from .unify import features_compatible, focus_evidence, unify_dependency

__all__ = [
    "Evidence",
    "MatchResult",
    "SlotEvidence",
    "features_compatible",
    "focus_evidence",
    "match",
    "match_unit",
    "unify_dependency",
]
