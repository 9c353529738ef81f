from __future__ import annotations

import json
from logging import getLogger
from pathlib import Path

from ..errors import LexiconValidationError, PatternSyntaxError
from ..syntax.patterns import DERIVED, PIVOT, parse_pattern, parse_patterns
from ..utils import validate_records, write_json
from .models import (
    Derivative,
    HeadwordRecord,
    RewriteSchema,
    RewriteSchemaRecord,
    SenseDictionary,
    SenseEntry,
)

__all__ = ["dump_sense_dictionary", "load_rewrite_schemas", "load_sense_dictionary", "save_sense_dictionary"]

logger = getLogger(__name__)


def _check_headword(record: HeadwordRecord) -> None:
    ids = [s.id for s in record.senses]

    if not ids:
        raise ValueError("no senses")

    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise ValueError(f"duplicate sense id {dup}")

    if sorted(ids) != list(range(1, len(ids) + 1)):
        raise ValueError(f"sense ids {sorted(ids)} are not dense from 1")

    for sense in record.senses:
        for d in sense.derivatives:
            if (d.lemma, d.pos) == (record.lemma, record.pos):
                raise ValueError(f"sense {sense.id} lists the headword as its own derivative")

        for schema in sense.schemas:
            try:
                pattern = parse_pattern(schema)
            except PatternSyntaxError as e:
                raise ValueError(f"sense {sense.id}: {e}") from None

            if pattern.count(PIVOT) != 1:
                raise ValueError(f"sense {sense.id}: schema {schema!r} must reference {PIVOT} exactly once")


def load_sense_dictionary(path: Path) -> SenseDictionary:
    """
    Load and validate a sense dictionary file.

    Raises:
        DataFormatError: The file does not parse.
        LexiconValidationError: An entry breaks a dictionary invariant.
    """
    entries = list[SenseEntry]()
    seen = dict[tuple[str, str], int]()

    for line, record in validate_records(path, HeadwordRecord):
        label = f"{record.lemma}/{record.pos}"

        if (record.lemma, record.pos) in seen:
            raise LexiconValidationError(label, f"already defined on line {seen[record.lemma, record.pos]}", path, line)

        seen[record.lemma, record.pos] = line

        try:
            _check_headword(record)
        except ValueError as e:
            raise LexiconValidationError(label, str(e), path, line) from None

        entries.extend(
            SenseEntry(
                lemma=record.lemma,
                pos=record.pos,
                sense_id=sense.id,
                gloss=sense.gloss,
                sem_class=sense.sem_class,
                domain=sense.domain,
                parasynonyms=frozenset(sense.parasynonyms) - {record.lemma},
                derivatives=frozenset(Derivative(d.lemma, d.pos, d.kind) for d in sense.derivatives),
                examples=tuple(sense.examples),
                schemas=tuple(sense.schemas),
            )
            for sense in record.senses
        )

    dictionary = SenseDictionary(entries)
    logger.debug("Loaded %d headwords (%d senses) from %s", len(dictionary), len(entries), path)

    return dictionary


def dump_sense_dictionary(dictionary: SenseDictionary) -> str:
    """Serialize a dictionary to the format `load_sense_dictionary` reads."""
    records = [
        HeadwordRecord(lemma=lemma, pos=pos, senses=[e.to_record() for e in dictionary.senses(lemma, pos)])
        for lemma, pos in dictionary
    ]

    return json.dumps([r.model_dump(mode="json") for r in records], ensure_ascii=False, indent=2) + "\n"


def save_sense_dictionary(dictionary: SenseDictionary, path: Path) -> None:
    write_json(path, lambda: dump_sense_dictionary(dictionary))


def _check_schema(record: RewriteSchemaRecord) -> RewriteSchema:
    from_pattern = parse_patterns(record.from_)
    to_pattern = parse_patterns(record.to)

    for pattern in from_pattern:
        if pattern.count(PIVOT) != 1:
            raise ValueError(f"{pattern} must reference {PIVOT} exactly once")
    for pattern in to_pattern:
        if pattern.count(DERIVED) != 1:
            raise ValueError(f"{pattern} must reference {DERIVED} exactly once")

    bound = set[str]().union(*(p.variables for p in from_pattern))
    free = set[str]().union(*(p.variables for p in to_pattern)) - bound - {DERIVED}

    if free:
        raise ValueError(f"{', '.join(sorted(free))} not bound by the source pattern")

    if any(PIVOT in p.slots for p in to_pattern):
        raise ValueError(f"{PIVOT} cannot appear in the rewritten pattern")

    return RewriteSchema(record.kind, from_pattern, to_pattern)


def load_rewrite_schemas(path: Path) -> list[RewriteSchema]:
    """
    Raises:
        DataFormatError: The file does not parse or a schema is malformed.
    """
    schemas = list[RewriteSchema]()

    for line, record in validate_records(path, RewriteSchemaRecord):
        try:
            schemas.append(_check_schema(record))
        except (PatternSyntaxError, ValueError) as e:
            raise LexiconValidationError(f"{record.kind}: {record.from_}", str(e), path, line) from None

    logger.debug("Loaded %d rewrite schemas from %s", len(schemas), path)

    return schemas
