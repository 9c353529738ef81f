import pytest

from enrichqa.enums import FocusKind, Pos
from enrichqa.errors import UnanalyzableQuestionError
from enrichqa.evaluation import GoldQuestion
from enrichqa.morpho import tokenize
from enrichqa.question import Focus, analyze_question, drop_inversion
from enrichqa.resources import LexicalResources

# --- Normalization Tests ---


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("Domitien succéda-t-il à Titus ?", ["Domitien", "succéda", "à", "Titus", "?"]),
        (
            "De quel chef Domitien fut-il le successeur ?",
            ["De", "quel", "chef", "Domitien", "fut", "le", "successeur", "?"],
        ),
        ("Est-ce que César mourut ?", ["César", "mourut", "?"]),
        ("Il dit ce que César fit.", ["Il", "dit", "ce", "que", "César", "fit", "."]),
    ],
)
def test_drop_inversion(text: str, expected: list[str]) -> None:
    tokens = [t for s in tokenize(text) for t in s]

    assert [t.surface for t in drop_inversion(text, tokens)] == expected


def test_explicit_focus_needs_a_lemma() -> None:
    with pytest.raises(ValueError, match="needs a lemma"):
        Focus(FocusKind.EXPLICIT)


# --- Local Structure Tests ---


@pytest.mark.parametrize(
    ("text", "structure", "host"),
    [
        ("Qui fonda Lugdunum ?", "SUBJ(fonder,VAR), VARG[DIR](fonder,Lugdunum)", ((0, 1),)),
        ("Où mourut César ?", "SUBJ(mourir,César), VARG[INDIR](mourir,à,VAR)", ((1, 2),)),
        ("Que fonda Plancus ?", "SUBJ(fonder,Plancus), VARG[DIR](fonder,VAR)", ((1, 1),)),
        (
            "À quel empereur Domitien succéda-t-il ?",
            "SUBJ(succéder,Domitien), VARG[INDIR](succéder,à,VAR)",
            ((1, 2),),
        ),
        (
            "De quel chef Domitien fut-il le successeur ?",
            "NMOD[SPRED](Domitien,successeur), NMOD[INDIR](successeur,de,VAR)",
            ((1, 2),),
        ),
    ],
)
def test_local_structures(
    resources: LexicalResources, text: str, structure: str, host: tuple[tuple[int, int], ...]
) -> None:
    local = analyze_question(text, resources)

    assert str(local) == structure
    assert local.focus.host == host
    assert local.text == text


def test_interrogative_focus_carries_its_traits(resources: LexicalResources) -> None:
    qui = analyze_question("Qui fonda Lugdunum ?", resources).focus
    ou = analyze_question("Où mourut César ?", resources).focus
    que = analyze_question("Que fonda Plancus ?", resources).focus

    assert (qui.kind, qui.traits, qui.lemma, qui.word) == (FocusKind.INTERROGATIVE, {"HUMAN"}, None, "Qui")
    assert ou.traits == {"PLACE"}
    assert "HUMAN" not in que.traits
    assert "PLACE" in que.traits


def test_determiner_gives_an_explicit_focus(resources: LexicalResources) -> None:
    focus = analyze_question("À quel empereur Domitien succéda-t-il ?", resources).focus

    assert focus.kind is FocusKind.EXPLICIT
    assert (focus.lemma, focus.pos, focus.word) == ("empereur", Pos.NOUN, "quel")
    assert focus.traits == {"HUMAN", "POWER"}


def test_question_without_interrogative(resources: LexicalResources) -> None:
    local = analyze_question("César vainquit Vercingétorix ?", resources)

    assert local.focus == Focus(FocusKind.INTERROGATIVE)
    assert local.dependencies


@pytest.mark.parametrize("text", ["Bonjour ?", "?", ""])
def test_unanalyzable_question(resources: LexicalResources, text: str) -> None:
    with pytest.raises(UnanalyzableQuestionError) as e:
        analyze_question(text, resources)

    assert e.value.question == text


@pytest.mark.parametrize(("text", "left"), [("Qui fonda quoi ?", "quoi"), ("Qui succéda à qui ?", "qui")])
def test_second_interrogative_is_rejected(resources: LexicalResources, text: str, left: str) -> None:
    with pytest.raises(UnanalyzableQuestionError, match=f"more than one interrogative: {left}") as e:
        analyze_question(text, resources)

    assert e.value.reason.endswith(left)


def test_no_interrogative_is_left_as_a_slot(resources: LexicalResources, questions: list[GoldQuestion]) -> None:
    for gold in questions:
        try:
            local = analyze_question(gold.question, resources)
        except UnanalyzableQuestionError:
            continue

        slots = {s.lemma for d in local.dependencies for s in d.slots}

        assert not {s for s in slots if resources.interrogatives.get(s)}, gold.question
