"""Sense dictionary, external synonym dictionaries and derivation rewrite schemas."""

from .api import SynonymSource, hookimpl
from .loader import dump_sense_dictionary, load_rewrite_schemas, load_sense_dictionary, save_sense_dictionary
from .models import Derivative, RewriteSchema, SenseDictionary, SenseEntry, SynonymGroup
from .query import SynonymIndex, all_synonyms, derivatives_of, sense_filtered_synonyms, trait_set
from .sources import load_synonym_groups, synonym_sources

__all__ = [
    "Derivative",
    "RewriteSchema",
    "SenseDictionary",
    "SenseEntry",
    "SynonymGroup",
    "SynonymIndex",
    "SynonymSource",
    "all_synonyms",
    "derivatives_of",
    "dump_sense_dictionary",
    "hookimpl",
    "load_rewrite_schemas",
    "load_sense_dictionary",
    "load_synonym_groups",
    "save_sense_dictionary",
    "sense_filtered_synonyms",
    "synonym_sources",
    "trait_set",
]
