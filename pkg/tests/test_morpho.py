from pathlib import Path

import pytest

from enrichqa.enums import Pos
from enrichqa.errors import DataFormatError
from enrichqa.morpho import MorphReading, Token, gaps, guess, load_fullform_lexicon, tokenize
from enrichqa.resources import LexicalResources


def surfaces(sentence: list[Token]) -> list[str]:
    return [t.surface for t in sentence]


# --- Tokenizer Tests ---


def test_tokenize_splits_sentences_on_capitalized_followers() -> None:
    sentences = tokenize("César fixe à Alésia le chef des coalisés. Les Romains entourent la ville.")

    assert [surfaces(s) for s in sentences] == [
        ["César", "fixe", "à", "Alésia", "le", "chef", "des", "coalisés", "."],
        ["Les", "Romains", "entourent", "la", "ville", "."],
    ]
    assert [t.position for t in sentences[1]] == list(range(6))
    assert {t.sentence_id for t in sentences[1]} == {1}


def test_tokenize_keeps_abbreviations_and_initials_inside_sentences() -> None:
    assert len(tokenize("Il vint env. Trois jours passèrent.", {"env"})) == 1
    assert len(tokenize("Il vint env. Trois jours passèrent.")) == 2
    assert len(tokenize("J. César vint.")) == 1


def test_tokenize_needs_a_capital_after_the_period() -> None:
    assert len(tokenize("Il vint. puis partit.")) == 1


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("l'empereur", ["l'", "empereur"]),
        ("l’empereur", ["l’", "empereur"]),
        ("qu'il", ["qu'", "il"]),
        ("succéda-t-il", ["succéda", "il"]),
        ("fut-il", ["fut", "il"]),
        ("est-ce que", ["est", "ce", "que"]),
        ("grand-mère", ["grand-mère"]),
        ("en 1515, à Marignan", ["en", "1515", ",", "à", "Marignan"]),
    ],
)
def test_tokenize_units(text: str, expected: list[str]) -> None:
    assert [t.surface for s in tokenize(text) for t in s] == expected


def test_gaps_rebuild_the_text() -> None:
    text = "Domitien succéda-t-il à Titus ?"
    tokens = [t for s in tokenize(text) for t in s]
    between = gaps(text, tokens)

    assert between[2] == "-t-"
    assert "".join(g + t.surface for g, t in zip(between, tokens)) + between[-1] == text


# --- Analyzer Tests ---


@pytest.mark.parametrize(
    ("surface", "initial", "expected"),
    [
        ("Domitien", False, MorphReading("Domitien", Pos.PROPN, frozenset({"cap"}))),
        ("Domitien", True, MorphReading("Domitien", Pos.PROPN, frozenset({"cap", "initial"}))),
        ("rapidement", False, MorphReading("rapidement", Pos.ADV)),
        ("chanter", False, MorphReading("chanter", Pos.VERB, frozenset({"inf"}))),
        ("maisons", False, MorphReading("maison", Pos.NOUN, frozenset({"pl"}))),
        ("fondations", False, MorphReading("fondation", Pos.NOUN, frozenset({"pl", "suffix"}))),
        ("?", False, MorphReading("?", Pos.PUNCT)),
        ("44", False, MorphReading("44", Pos.NUM)),
    ],
)
def test_guess(surface: str, initial: bool, expected: MorphReading) -> None:
    assert guess(surface, initial) == expected


@pytest.mark.parametrize(
    ("surface", "expected"),
    [
        ("trahi", MorphReading("trahir", Pos.VERB, frozenset({"part", "past"}))),
        ("fondées", MorphReading("fonder", Pos.VERB, frozenset({"part", "past", "pl"}))),
        ("rendu", MorphReading("rendre", Pos.VERB, frozenset({"part", "past"}))),
        ("maison", MorphReading("maison", Pos.NOUN)),
    ],
)
def test_guess_past_participle_after_auxiliary(surface: str, expected: MorphReading) -> None:
    assert guess(surface, after_auxiliary=True) == expected
    assert guess(surface).pos is Pos.NOUN


def test_guess_sentence_initial_capitals() -> None:
    assert guess("Pompée", sentence_initial=True).pos is Pos.PROPN
    assert guess("Diriger", sentence_initial=True) == MorphReading("diriger", Pos.VERB, frozenset({"inf"}))
    assert guess("Diriger").pos is Pos.PROPN


def test_analyze_guesses_participles_after_avoir_and_etre(resources: LexicalResources) -> None:
    (sentence,) = resources.pipeline.analyze("Brutus a trahi César et Titus est parti")

    assert sentence[2].readings == (MorphReading("trahir", Pos.VERB, frozenset({"part", "past"})),)
    assert sentence[7].readings == (MorphReading("partir", Pos.VERB, frozenset({"part", "past"})),)
    assert sentence[0].readings[0].pos is Pos.PROPN


def test_analyze_reads_the_lexicon_before_guessing(resources: LexicalResources) -> None:
    (sentence,) = resources.pipeline.analyze("Les coalisés fixe Domitien")

    assert [r.lemma for r in sentence[0].readings] == ["le"]
    assert [r.pos for r in sentence[2].readings] == [Pos.ADJ, Pos.NOUN, Pos.VERB]
    assert sentence[3].readings == (MorphReading("Domitien", Pos.PROPN, frozenset({"cap"})),)
    assert all(t.selected is None for t in sentence)


def test_untagged_token_has_no_reading() -> None:
    token = Token("chef", (0, 4), 0, 0, (MorphReading("chef", Pos.NOUN),))

    with pytest.raises(ValueError, match="not been tagged"):
        token.lemma


def test_reading_needs_a_lemma() -> None:
    with pytest.raises(ValueError, match="non-empty lemma"):
        MorphReading("", Pos.NOUN)


# --- Full-Form Lexicon Tests ---


def test_fullform_lexicon_accumulates_repeated_surfaces(tmp_path: Path) -> None:
    path = tmp_path / "fullforms.json"
    path.write_text(
        '[{"surface": "commande", "readings": [{"lemma": "commande", "pos": "NOUN"}]},\n'
        ' {"surface": "commande", "readings": [{"lemma": "commander", "pos": "VERB"},'
        ' {"lemma": "commande", "pos": "NOUN"}]}]',
        encoding="utf-8",
    )

    lexicon = load_fullform_lexicon(path)

    assert [r.pos for r in lexicon["commande"]] == [Pos.NOUN, Pos.VERB]
    assert lexicon.lookup("Commande") == lexicon["commande"]
    assert lexicon.lookup("commandes") == ()


def test_fullform_lexicon_reports_the_bad_record(tmp_path: Path) -> None:
    path = tmp_path / "fullforms.json"
    path.write_text('[\n  {"surface": "chef", "readings": [{"lemma": "chef", "pos": "NOUN"}]},\n  {"surface": "x"}\n]')

    with pytest.raises(DataFormatError) as e:
        load_fullform_lexicon(path)

    assert e.value.line == 3


# --- Tagger Tests ---


def test_tag_prefers_readings_from_context(resources: LexicalResources) -> None:
    pipeline = resources.pipeline
    (sentence,) = pipeline.analyze("César fixe à Alésia le chef des coalisés.")

    tagged = pipeline.tag(sentence)

    assert [t.pos for t in tagged] == [
        Pos.PROPN,
        Pos.VERB,
        Pos.PREP,
        Pos.PROPN,
        Pos.DET,
        Pos.NOUN,
        Pos.PREP,
        Pos.NOUN,
        Pos.PUNCT,
    ]
    assert tagged[6].reading.contracted == "les"


def test_tag_falls_back_to_the_first_reading(resources: LexicalResources) -> None:
    pipeline = resources.pipeline
    (sentence,) = pipeline.analyze("des coalisés")

    assert pipeline.tag(sentence)[0].pos is Pos.DET


def test_tag_needs_analyzed_tokens(resources: LexicalResources) -> None:
    with pytest.raises(ValueError, match="not analyzed"):
        resources.pipeline.tag([Token("chef", (0, 4), 0, 0)])
