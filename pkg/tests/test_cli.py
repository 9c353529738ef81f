import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from enrichqa.cli import app, main
from enrichqa.enums import Condition
from enrichqa.index import CorpusIndex, load_index, save_index

runner = CliRunner()

SUCCESSOR = "De quel chef Domitien fut-il le successeur ?"


def flat(output: str) -> str:
    """Output without whitespace, immune to console wrapping."""
    return "".join(output.split())


@pytest.fixture
def index_file(indexes: dict[Condition, CorpusIndex], tmp_path: Path) -> Path:
    path = tmp_path / "all.json"
    save_index(indexes[Condition.ALL], path)
    return path


# --- Command Tests ---


def test_build(corpus_path: Path, tmp_path: Path) -> None:
    path = tmp_path / "index.json"

    result = runner.invoke(app, ["build", "--corpus", str(corpus_path), "--out", str(path), "--config", "plancher"])

    assert result.exit_code == 0, result.output
    assert "Indexed 27 sentences" in result.output
    assert load_index(path).settings.condition is Condition.PLANCHER


def test_query_with_evidence(index_file: Path) -> None:
    result = runner.invoke(app, ["query", "--index", str(index_file), "--question", SUCCESSOR, "--explain"])

    assert result.exit_code == 0, result.output
    assert "#1d02:1" in flat(result.output)
    assert "successeur<derivation>" in flat(result.output)


def test_query_without_answer(indexes: dict[Condition, CorpusIndex], tmp_path: Path) -> None:
    path = tmp_path / "plancher.json"
    save_index(indexes[Condition.PLANCHER], path)

    result = runner.invoke(app, ["query", "-i", str(path), "-q", "Qui est le roi des Perses ?"])

    assert result.exit_code == 0, result.output
    assert "Pas de réponse." in result.output


def test_explain(index_file: Path) -> None:
    result = runner.invoke(app, ["explain", "--index", str(index_file), "--question", SUCCESSOR])

    assert result.exit_code == 0, result.output
    assert "NMOD[INDIR](successeur,de,VAR)" in flat(result.output)
    assert "lemma=chef" in result.output


def test_enrich() -> None:
    result = runner.invoke(app, ["enrich", "--text", "Domitien succéda à l'empereur Titus.", "--config", "all"])

    assert result.exit_code == 0, result.output
    assert "succéder/VERBsens1" in flat(result.output)
    assert "NMOD[INDIR](successeur<derivation>,de<derivation>," in flat(result.output)


def test_eval_writes_the_report(
    indexes: dict[Condition, CorpusIndex], questions_path: Path, tmp_path: Path
) -> None:
    index = tmp_path / "plancher.json"
    report = tmp_path / "out" / "report.json"
    save_index(indexes[Condition.PLANCHER], index)

    result = runner.invoke(
        app, ["eval", "--index", str(index), "--questions", str(questions_path), "--report", str(report), "-j", "2"]
    )

    assert result.exit_code == 0, result.output
    assert "Mean: 15/32" in result.output
    assert json.loads(report.read_text(encoding="utf-8"))["mean"] == "15/32"


def test_compare(corpus_path: Path, questions_path: Path, tmp_path: Path) -> None:
    result = runner.invoke(
        app, ["compare", "--corpus", str(corpus_path), "--questions", str(questions_path), "--out-dir", str(tmp_path)]
    )

    assert result.exit_code == 0, result.output
    assert len(list(tmp_path.glob("*.json"))) == 4


def test_rules() -> None:
    result = runner.invoke(app, ["rules"])

    assert result.exit_code == 0, result.output
    assert flat("succéder : VARG[INDIR](succéder,à,*) ==> sens 1") in flat(result.output)


def test_bad_config_is_a_usage_error(corpus_path: Path, tmp_path: Path) -> None:
    result = runner.invoke(
        app, ["build", "--corpus", str(corpus_path), "--out", str(tmp_path / "x.json"), "--config", "nope"]
    )

    assert result.exit_code == 2
    assert not (tmp_path / "x.json").exists()


# --- Exit Code Tests ---


@pytest.mark.parametrize(
    "args",
    [
        ["build", "--corpus", "corpus.txt", "--out", "x.json", "--config", "nope"],
        ["query"],
        ["query", "--index", "x.json", "--question", "Qui ?", "--bogus"],
        ["translate"],
    ],
)
def test_main_usage_errors_exit_with_one(args: list[str]) -> None:
    with pytest.raises(SystemExit) as e:
        main(args)

    assert e.value.code == 1


def test_main_data_error_exits_with_two(tmp_path: Path) -> None:
    with pytest.raises(SystemExit) as e:
        main(["build", "--corpus", str(tmp_path / "missing.txt"), "--out", str(tmp_path / "x.json")])

    assert e.value.code == 2


def test_main_success_exits_with_zero() -> None:
    with pytest.raises(SystemExit) as e:
        main(["rules"])

    assert e.value.code == 0
