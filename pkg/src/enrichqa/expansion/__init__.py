"""Enrichment of dependency structures with synonyms and derivational rewrites."""

from .derivations import apply_derivation_rewrites, match_schema
from .models import Alternate, EnrichedDependency, EnrichedSlot
from .synonyms import enrich_with_synonyms

__all__ = [
    "Alternate",
    "EnrichedDependency",
    "EnrichedSlot",
    "apply_derivation_rewrites",
    "enrich_with_synonyms",
    "match_schema",
]
