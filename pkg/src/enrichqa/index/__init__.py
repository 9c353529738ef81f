"""Persistent enriched index of a corpus."""

from .builder import build_index, build_postings, enrich_sentence, index_corpus, is_stop_slot
from .corpus import Document, parse_corpus, read_corpus
from .models import INDEX_VERSION, CorpusIndex, Posting, SentenceRecord, UnitRef
from .store import load_index, save_index

__all__ = [
    "INDEX_VERSION",
    "CorpusIndex",
    "Document",
    "Posting",
    "SentenceRecord",
    "UnitRef",
    "build_index",
    "build_postings",
    "enrich_sentence",
    "index_corpus",
    "is_stop_slot",
    "load_index",
    "parse_corpus",
    "read_corpus",
    "save_index",
]
