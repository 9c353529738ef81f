from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from pathlib import Path

from ..enums import Pos
from ..expansion import EnrichedDependency, EnrichedSlot, apply_derivation_rewrites, enrich_with_synonyms
from ..pipeline import ParsedSentence
from ..resources import LexicalResources
from ..settings import PipelineSettings
from ..syntax import VARIABLE
from ..wsd import SenseAssignment, apply_rules
from .corpus import Document, read_corpus
from .models import CorpusIndex, Posting, SentenceRecord

__all__ = ["build_index", "build_postings", "enrich_sentence", "index_corpus", "is_stop_slot"]

logger = getLogger(__name__)

STOP_POS = frozenset({Pos.DET, Pos.PREP, Pos.PUNCT, Pos.CONJ})
STOP_LEMMAS = frozenset({"avoir"})


def is_stop_slot(slot: EnrichedSlot, copulas: frozenset[str]) -> bool:
    """Slots kept inside dependencies but left out of the postings."""
    return slot.pos in STOP_POS or slot.original in copulas | STOP_LEMMAS or slot.original == VARIABLE


def enrich_sentence(
    parsed: ParsedSentence, resources: LexicalResources, settings: PipelineSettings
) -> tuple[list[EnrichedDependency], list[SenseAssignment]]:
    """Disambiguate one parsed sentence and enrich its dependencies as `settings` asks."""
    assignments = apply_rules(parsed.dependencies, resources.rules, resources.dictionary)
    enriched = enrich_with_synonyms(
        parsed.dependencies, assignments, resources.dictionary, resources.synonyms, settings
    )

    if settings.derivations:
        enriched += apply_derivation_rewrites(enriched, assignments, resources.dictionary, resources.schemas)

    return enriched, assignments


def _index_document(
    document: Document, resources: LexicalResources, settings: PipelineSettings
) -> list[SentenceRecord]:
    records = list[SentenceRecord]()

    for paragraph_no, paragraph in enumerate(document.paragraphs, 1):
        for parsed in resources.pipeline.parse(paragraph):
            deps, assignments = enrich_sentence(parsed, resources, settings)
            records.append(
                SentenceRecord(
                    document.doc_id,
                    paragraph_no,
                    len(records) + 1,
                    parsed.text,
                    tuple(deps),
                    tuple(assignments),
                )
            )

    logger.debug("Indexed %s: %d sentences", document.doc_id, len(records))

    return records


def build_postings(records: Sequence[SentenceRecord], copulas: frozenset[str]) -> dict[str, tuple[Posting, ...]]:
    postings = dict[str, list[Posting]]()

    for i, record in enumerate(records):
        for j, dep in enumerate(record.dependencies):
            for k, slot in enumerate(dep.slots):
                if is_stop_slot(slot, copulas):
                    continue

                postings.setdefault(slot.original, []).append(Posting(i, j, k, slot.origin))

                for alt in slot.alternates:
                    postings.setdefault(alt.lemma, []).append(Posting(i, j, k, alt.origin))

    return {lemma: tuple(p) for lemma, p in postings.items()}


def build_index(
    documents: Sequence[Document],
    settings: PipelineSettings,
    resources: LexicalResources,
    workers: int | None = None,
) -> CorpusIndex:
    """
    Analyze, disambiguate, enrich and index documents.

    Documents are processed in parallel; records keep the document order.
    """
    # Compile once before the workers share the resources
    resources.rules

    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="Indexer") as pool:
        per_document = list(pool.map(lambda d: _index_document(d, resources, settings), documents))

    records = tuple(r for doc in per_document for r in doc)

    index = CorpusIndex(
        settings=settings,
        lexicon=resources.label,
        records=records,
        postings=build_postings(records, resources.grammar.copulas),
    )

    logger.info(
        "Indexed %d documents, %d sentences, %d lemmas", len(documents), len(records), len(index.postings)
    )

    return index


def index_corpus(
    corpus: Path, settings: PipelineSettings, resources: LexicalResources, workers: int | None = None
) -> CorpusIndex:
    """
    Raises:
        DataFormatError: The corpus file is missing or malformed.
    """
    return build_index(read_corpus(corpus), settings, resources, workers)
