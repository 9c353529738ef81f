import pytest
from pydantic import ValidationError

from enrichqa.enums import ChunkKind, Feature, Relation
from enrichqa.errors import PatternSyntaxError
from enrichqa.resources import LexicalResources
from enrichqa.syntax import DependencyRule, chunk
from enrichqa.syntax.patterns import DependencyPattern, format_patterns, parse_pattern, parse_patterns

FIXER = "César fixe à Alésia le chef des coalisés."


# --- Pattern Tests ---


def test_parse_pattern() -> None:
    pattern = parse_pattern(" VARG[INDIR]($X,à,*) ")

    assert pattern == DependencyPattern(Relation.VARG, frozenset({Feature.INDIR}), ("$X", "à", "*"))
    assert pattern.variables == {"$X"}
    assert pattern.literals == ("à",)
    assert str(pattern) == "VARG[INDIR]($X,à,*)"


def test_parse_patterns_joins_with_plus() -> None:
    patterns = parse_patterns("SUBJ($X,$S) + VARG[DIR]($X,$O)")

    assert [p.name for p in patterns] == [Relation.SUBJ, Relation.VARG]
    assert format_patterns(patterns) == "SUBJ($X,$S) + VARG[DIR]($X,$O)"


def test_features_render_in_declaration_order() -> None:
    assert str(parse_pattern("NMOD[SPRED,DIR](a,b)")) == "NMOD[DIR,SPRED](a,b)"


@pytest.mark.parametrize(
    ("text", "reason"),
    [
        ("SUBJ a b", "expected NAME"),
        ("FOO(a,b)", "unknown relation"),
        ("SUBJ[BAD](a,b)", "unknown feature"),
        ("SUBJ(a,)", "empty slot"),
        ("SUBJ($x,b)", "one capital letter"),
        ("VARG(a,b)", "exactly one of DIR, INDIR"),
        ("NMOD[INDIR](a,b)", "if and only if INDIR"),
        ("NMOD(a,de,b)", "if and only if INDIR"),
        ("NN(a,b,c,d)", "2 or 3 slots"),
    ],
)
def test_parse_pattern_errors(text: str, reason: str) -> None:
    with pytest.raises(PatternSyntaxError, match=reason):
        parse_pattern(text)


def test_parse_patterns_rejects_empty_parts() -> None:
    with pytest.raises(PatternSyntaxError, match="around '\\+'"):
        parse_patterns("SUBJ(a,b) + ")


# --- Grammar Tests ---


def test_dependency_rule_elements() -> None:
    rule = DependencyRule.model_validate({"name": "SUBJ", "lhs": "NP PP* VP[!copula]", "emit": ["$3", "$1"]})

    assert [e.kinds for e in rule.elements] == [{ChunkKind.NP}, {ChunkKind.PP}, {ChunkKind.VP}]
    assert [e.star for e in rule.elements] == [False, True, False]
    assert rule.elements[2].copula is False
    assert [(r.kind, r.index) for r in rule.refs] == [("$", 2), ("$", 0)]


@pytest.mark.parametrize(
    ("rule", "reason"),
    [
        ({"name": "NN", "lhs": "NP|XP", "emit": ["$1", "@1"]}, "XP"),
        ({"name": "NN", "lhs": "NP", "emit": ["$1", "$2"]}, "outside"),
        ({"name": "SUBJ", "lhs": "NP PP* VP", "emit": ["$3", "$2"]}, "repeated element"),
        ({"name": "NMOD", "features": ["INDIR"], "lhs": "NP PP", "emit": ["$1", "$2"]}, "INDIR"),
        ({"name": "SUBJ", "lhs": "NP VP", "emit": ["$2", "#1"]}, "invalid slot reference"),
    ],
)
def test_dependency_rule_errors(rule: dict[str, object], reason: str) -> None:
    with pytest.raises(ValidationError, match=reason):
        DependencyRule.model_validate(rule)


def test_preposition_classes(resources: LexicalResources) -> None:
    grammar = resources.grammar

    assert grammar.same_preposition("de", "des")
    assert grammar.same_preposition("à", "aux")
    assert grammar.same_preposition("avec", "avec")
    assert not grammar.same_preposition("à", "de")


# --- Chunker Tests ---


def test_chunks_partition_the_sentence(resources: LexicalResources) -> None:
    pipeline = resources.pipeline
    (sentence,) = pipeline.analyze(FIXER)

    chunks = chunk(pipeline.tag(sentence), resources.grammar)

    assert [str(c) for c in chunks] == [
        "NP(César)",
        "VP(fixe)",
        "PP(à Alésia)",
        "NP(le chef)",
        "PP(des coalisés)",
        "UNK(.)",
    ]
    assert [c.head_token.surface for c in chunks] == ["César", "fixe", "Alésia", "chef", "coalisés", "."]
    assert [t for c in chunks for t in c.token_range] == list(range(len(sentence)))


def test_chunk_of_nothing(resources: LexicalResources) -> None:
    assert chunk([], resources.grammar) == []


# --- Dependency Extraction Tests ---


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        (
            FIXER,
            [
                "SUBJ(fixer,César)",
                "VARG[DIR](fixer,chef)",
                "VARG[INDIR](fixer,à,Alésia)",
                "NMOD[INDIR](chef,de,coalisé)",
            ],
        ),
        ("Pompée est le chef de Lucullus.", ["NMOD[SPRED](Pompée,chef)", "NMOD[INDIR](chef,de,Lucullus)"]),
        (
            "Domitien succéda à l'empereur Titus.",
            ["SUBJ(succéder,Domitien)", "VARG[INDIR](succéder,à,empereur)", "NN(empereur,Titus)"],
        ),
        ("Plancus fonda Lugdunum.", ["SUBJ(fonder,Plancus)", "VARG[DIR](fonder,Lugdunum)"]),
        ("César a vaincu Vercingétorix.", ["SUBJ(vaincre,César)", "VARG[DIR](vaincre,Vercingétorix)"]),
        ("Brutus a trahi César.", ["SUBJ(trahir,Brutus)", "VARG[DIR](trahir,César)"]),
        ("Auguste est devenu empereur.", ["NMOD[SPRED](Auguste,empereur)"]),
    ],
)
def test_extract_dependencies(resources: LexicalResources, text: str, expected: list[str]) -> None:
    (parsed,) = resources.pipeline.parse(text)

    assert [str(d) for d in parsed.dependencies] == expected


def test_dependency_slots_point_at_their_tokens(resources: LexicalResources) -> None:
    (parsed,) = resources.pipeline.parse(FIXER)

    for dep in parsed.dependencies:
        for slot in dep.slots:
            assert slot.token is not None
            assert parsed.tokens[slot.token].lemma == slot.lemma
        assert len({s.token for s in dep.slots}) == len(dep.slots)


def test_parse_keeps_sentence_text(resources: LexicalResources) -> None:
    parsed = resources.pipeline.parse("Néron incendia Rome. Titus succéda à Vespasien.")

    assert [p.text for p in parsed] == ["Néron incendia Rome.", "Titus succéda à Vespasien."]
