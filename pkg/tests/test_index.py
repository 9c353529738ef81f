from pathlib import Path

import pytest

from enrichqa.enums import Condition, Granularity, Origin
from enrichqa.errors import DataFormatError, IndexVersionError
from enrichqa.index import (
    INDEX_VERSION,
    CorpusIndex,
    UnitRef,
    build_index,
    index_corpus,
    is_stop_slot,
    load_index,
    parse_corpus,
    read_corpus,
    save_index,
)
from enrichqa.resources import LexicalResources
from enrichqa.settings import PRESETS

# --- Corpus Tests ---


def test_parse_corpus_documents_and_paragraphs() -> None:
    documents = parse_corpus("#DOC a\nline one\nline two\n\n\nsecond\n#DOC b\nonly\n")

    assert [d.doc_id for d in documents] == ["a", "b"]
    assert documents[0].paragraphs == ("line one\nline two", "second")
    assert documents[1].paragraphs == ("only",)
    assert [d.line for d in documents] == [1, 7]


def test_parse_corpus_of_nothing() -> None:
    assert parse_corpus("") == []
    assert parse_corpus("\n\n#DOC empty\n").pop().paragraphs == ()


@pytest.mark.parametrize(
    ("text", "reason", "line"),
    [
        ("stray\n#DOC a\nx", "before the first #DOC", 1),
        ("#DOC a\nx\n#DOC\ny", "without a document id", 3),
        ("#DOC a\nx\n\n#DOC a\ny", "'a' already used on line 1", 4),
    ],
)
def test_parse_corpus_errors(text: str, reason: str, line: int) -> None:
    with pytest.raises(DataFormatError, match=reason) as e:
        parse_corpus(text, Path("corpus.txt"))

    assert e.value.line == line
    assert str(e.value).startswith(f"corpus.txt:{line}: ")


def test_read_corpus_missing_file(tmp_path: Path) -> None:
    with pytest.raises(DataFormatError, match="file not found"):
        read_corpus(tmp_path / "missing.txt")


def test_bundled_corpus_shape(corpus_path: Path) -> None:
    documents = read_corpus(corpus_path)

    assert len(documents) == 24
    assert sum(len(d.paragraphs) for d in documents) == 26


# --- Index Building Tests ---


def test_records_number_paragraphs_and_sentences(indexes: dict[Condition, CorpusIndex]) -> None:
    index = indexes[Condition.PLANCHER]

    def numbers(doc_id: str) -> list[tuple[int, int]]:
        return [(r.paragraph, r.sentence) for r in index.records if r.doc_id == doc_id]

    assert len(index.records) == 27
    assert numbers("d01") == [(1, 1), (1, 2), (2, 3)]
    assert numbers("d20") == [(1, 1), (2, 2)]
    assert index.records[0].text == "César fixe à Alésia le chef des coalisés."


@pytest.mark.parametrize(
    ("granularity", "count"),
    [(Granularity.SENTENCE, 27), (Granularity.PARAGRAPH, 26), (Granularity.DOCUMENT, 24)],
)
def test_units_per_granularity(
    indexes: dict[Condition, CorpusIndex], granularity: Granularity, count: int
) -> None:
    units = indexes[Condition.ALL].units(granularity)

    assert len(units) == count
    assert sorted(i for members in units.values() for i in members) == list(range(27))


def test_lookup_by_granularity(indexes: dict[Condition, CorpusIndex]) -> None:
    index = indexes[Condition.PLANCHER]

    assert {UnitRef("d01", 1), UnitRef("d12", 1), UnitRef("d14", 1)} <= index.lookup("César")
    assert UnitRef("d01", 1) in index.lookup("César", Granularity.PARAGRAPH)
    assert UnitRef("d01") in index.lookup("César", Granularity.DOCUMENT)
    assert all(u.number is None for u in index.lookup("César", Granularity.DOCUMENT))
    assert str(UnitRef("d01", 3)) == "d01:3"
    assert str(UnitRef("d01")) == "d01"


def test_lookup_finds_alternates_only_when_enriched(indexes: dict[Condition, CorpusIndex]) -> None:
    assert indexes[Condition.PLANCHER].lookup("dirigeant") == set()
    assert {UnitRef("d01", 1), UnitRef("d01", 3)} <= indexes[Condition.SYN_SEM].lookup("dirigeant")
    assert {p.origin for p in indexes[Condition.SYN_SEM].postings["dirigeant"]} == {Origin.PARASYNONYM}


def test_lookup_ignores_stop_lemmas(indexes: dict[Condition, CorpusIndex]) -> None:
    index = indexes[Condition.ALL]

    assert index.lookup("le") == set()
    assert index.lookup("être") == set()
    assert index.lookup("inconnu") == set()


def test_postings_point_at_their_lemma(indexes: dict[Condition, CorpusIndex], resources: LexicalResources) -> None:
    for index in indexes.values():
        for lemma, postings in index.postings.items():
            for p in postings:
                slot = index.records[p.sentence].dependencies[p.dependency].slots[p.slot]

                assert lemma in slot.lemmas
                assert slot.origin_of(lemma) is p.origin
                assert not is_stop_slot(slot, resources.grammar.copulas)


@pytest.mark.parametrize("granularity", list(Granularity))
def test_lookup_equals_a_scan_of_the_records(
    indexes: dict[Condition, CorpusIndex], resources: LexicalResources, granularity: Granularity
) -> None:
    for index in indexes.values():
        scanned = dict[str, set[UnitRef]]()

        for record in index.records:
            for dep in record.dependencies:
                for slot in dep.slots:
                    if is_stop_slot(slot, resources.grammar.copulas):
                        continue
                    for lemma in slot.lemmas:
                        scanned.setdefault(lemma, set()).add(record.unit(granularity))

        assert scanned.keys() == index.postings.keys()
        assert all(index.lookup(lemma, granularity) == units for lemma, units in scanned.items())


def test_enrichment_only_adds_postings(indexes: dict[Condition, CorpusIndex]) -> None:
    floor = indexes[Condition.PLANCHER]

    for condition in (Condition.SYN_NO_SEM, Condition.SYN_SEM, Condition.ALL):
        for lemma in floor.postings:
            assert floor.lookup(lemma) <= indexes[condition].lookup(lemma)


def test_index_records_its_settings(indexes: dict[Condition, CorpusIndex]) -> None:
    for condition, index in indexes.items():
        assert index.settings.condition is condition
        assert index.version == INDEX_VERSION
        assert index.lexicon == "bundled"


def test_parallel_build_keeps_document_order(
    indexes: dict[Condition, CorpusIndex], resources: LexicalResources, corpus_path: Path
) -> None:
    index = build_index(read_corpus(corpus_path), PRESETS[Condition.ALL], resources, 4)

    assert index.records == indexes[Condition.ALL].records
    assert index.postings == indexes[Condition.ALL].postings


def test_index_corpus_reads_the_file(resources: LexicalResources, tmp_path: Path) -> None:
    path = tmp_path / "corpus.txt"
    path.write_text("#DOC x\nPlancus fonda Lugdunum.\n", encoding="utf-8")

    index = index_corpus(path, PRESETS[Condition.PLANCHER], resources)

    assert index.lookup("Lugdunum") == {UnitRef("x", 1)}


# --- Store Tests ---


def test_saved_index_loads_back(indexes: dict[Condition, CorpusIndex], tmp_path: Path) -> None:
    index = indexes[Condition.ALL]
    path = tmp_path / "nested" / "all.json"

    save_index(index, path)
    loaded = load_index(path)

    assert loaded.settings == index.settings
    assert loaded.records == index.records
    assert loaded.postings == index.postings


@pytest.mark.parametrize(
    ("content", "error", "reason"),
    [
        ('{"version": 99, "settings": {}}', IndexVersionError, "unsupported index version 99"),
        ('{"settings": {}}', IndexVersionError, "unsupported index version None"),
        ("[]", DataFormatError, "not an index file"),
        ("{\n  oops", DataFormatError, "Expecting property name"),
        ('{"version": 1, "settings": {"granularity": "page"}}', DataFormatError, "invalid index"),
    ],
)
def test_load_index_errors(tmp_path: Path, content: str, error: type[DataFormatError], reason: str) -> None:
    path = tmp_path / "index.json"
    path.write_text(content, encoding="utf-8")

    with pytest.raises(error, match=reason):
        load_index(path)
