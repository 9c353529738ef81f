import sys
from collections.abc import Iterator
from contextlib import contextmanager
from logging import DEBUG, INFO, getLogger
from pathlib import Path
from typing import Annotated, cast

from rich.console import Console
from rich.table import Table
from typer import Abort, BadParameter, Exit, Option, Typer

from .enums import Condition, Granularity
from .errors import EnrichQAError
from .evaluation import compare_conditions, evaluate_run, load_questions, save_report
from .index import build_index, enrich_sentence, load_index, read_corpus, save_index
from .logging import VERBOSE, setup_logging
from .matcher import MatchResult, match
from .question import LocalStructure, analyze_question
from .resources import LexicalResources, load_resources
from .settings import PipelineSettings, load_settings
from .wsd import dump_rules

logger = getLogger(__name__)

# typer's own UsageError, whether click is vendored or not.
UsageError = cast("type[Exception]", BadParameter.__mro__[1])

out = Console(highlight=False)

app = Typer(
    name="enrichqa",
    help="Question answering over a corpus enriched with sense-filtered synonyms and derivations.",
    rich_markup_mode="rich",
    pretty_exceptions_enable=False,
    add_completion=False,
)

verbose_opt = Option(
    "--verbose",
    "-v",
    count=True,
    help="Enable verbose output (-v info, -vv debug, -vvv per-rule traces).",
)
lexicon_opt = Option(
    "--lexicon",
    "-l",
    help="Lexicon directory with senses.json, synonyms.json and schemas.json. Defaults to the bundled lexicon.",
    file_okay=False,
)
config_opt = Option(
    "--config",
    "-c",
    help=f"Enrichment preset ({', '.join(Condition)}) or a settings .json file.",
)
index_opt = Option("--index", "-i", help="Index file written by [bold]build[/bold].", dir_okay=False)
question_opt = Option("--question", "-q", help="Question text.")
workers_opt = Option("--workers", "-j", min=1, help="Worker threads. Defaults to the executor's choice.")


def _setup(verbose: int) -> None:
    levels = [None, INFO, DEBUG]
    setup_logging(level=levels[verbose] if verbose < len(levels) else VERBOSE)


@contextmanager
def _data_errors() -> Iterator[None]:
    """Log domain errors and leave with exit code 2."""
    try:
        yield
    except EnrichQAError as e:
        logger.error("%s", e, exc_info=logger.isEnabledFor(DEBUG))
        raise Exit(2) from None


def _settings(value: str) -> PipelineSettings:
    try:
        return load_settings(value)
    except EnrichQAError:
        raise
    except ValueError as e:
        raise BadParameter(str(e), param_hint="--config") from None


def _results_table(results: list[MatchResult]) -> Table:
    table = Table("#", "Unit", "Answer", "Orig.", "Alt.", "Text", title="Answers")

    for rank, result in enumerate(results, 1):
        table.add_row(
            str(rank),
            str(result.unit),
            result.answer,
            str(-result.score_key[0]),
            str(-result.score_key[1]),
            result.text,
        )

    return table


def _print_local(local: LocalStructure) -> None:
    focus = local.focus
    out.print(f"Structure: {local}", markup=False)
    out.print(
        f"[bold]Focus:[/bold] {focus.kind} {focus.word!r}"
        + (f" lemma={focus.lemma}" if focus.lemma else "")
        + f" traits={{{', '.join(sorted(focus.traits))}}}"
    )


def _print_evidence(results: list[MatchResult]) -> None:
    for rank, result in enumerate(results, 1):
        out.print(f"[bold]#{rank} {result.unit}[/bold]")
        for evidence in result.evidence:
            out.print(f"  {evidence.render()}", markup=False)


def _answer(
    index: Path, question: str, lexicon: Path | None, granularity: Granularity | None, limit: int | None
) -> tuple[LocalStructure, list[MatchResult]]:
    resources = load_resources(lexicon)
    loaded = load_index(index)
    local = analyze_question(question, resources)

    return local, match(local, loaded, resources, granularity, limit)


@app.command()
def build(
    corpus: Annotated[Path, Option("--corpus", help="Corpus file of `#DOC <id>` blocks.", dir_okay=False)],
    output: Annotated[Path, Option("--out", "-o", help="Index file to write.", dir_okay=False)],
    config: Annotated[str, config_opt] = Condition.ALL.value,
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    workers: Annotated[int | None, workers_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Analyze, disambiguate, enrich and index a corpus."""
    _setup(verbose)

    with _data_errors():
        settings = _settings(config)
        resources = load_resources(lexicon)
        index = build_index(read_corpus(corpus), settings, resources, workers)
        save_index(index, output)

    out.print(f"Indexed {len(index.records)} sentences, {len(index.postings)} lemmas into {output}")


@app.command()
def query(
    index: Annotated[Path, index_opt],
    question: Annotated[str, question_opt],
    granularity: Annotated[Granularity | None, Option(help="Unit returned. Defaults to the index's.")] = None,
    limit: Annotated[int | None, Option(min=1, help="Maximum number of answers.")] = None,
    explain: Annotated[bool, Option("--explain", help="Print the evidence of every answer.")] = False,
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Answer a question against an index."""
    _setup(verbose)

    with _data_errors():
        local, results = _answer(index, question, lexicon, granularity, limit)

    if not results:
        out.print("Pas de réponse.")
        return

    out.print(_results_table(results))

    if explain:
        _print_evidence(results)


@app.command()
def explain(
    index: Annotated[Path, index_opt],
    question: Annotated[str, question_opt],
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Show the question structure and, per answer, the enriched dependency each question dependency matched."""
    _setup(verbose)

    with _data_errors():
        local, results = _answer(index, question, lexicon, None, None)

    _print_local(local)

    if not results:
        out.print("Pas de réponse.")
        return

    _print_evidence(results)


@app.command()
def enrich(
    text: Annotated[str, Option("--text", "-t", help="Sentence(s) to analyze.")],
    config: Annotated[str, config_opt] = Condition.ALL.value,
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Print the disambiguated, enriched dependencies of a text."""
    _setup(verbose)

    with _data_errors():
        settings = _settings(config)
        resources = load_resources(lexicon)

        for parsed in resources.pipeline.parse(text):
            deps, assignments = enrich_sentence(parsed, resources, settings)
            out.print(f"[bold]{parsed.text}[/bold]")
            for a in assignments:
                out.print(f"  {a.lemma}/{a.pos} sens {a.sense_id} ({a.sem_class}, {a.domain})")
            for dep in deps:
                out.print(f"  {dep.render(tagged=True)}", markup=False)


@app.command(name="eval")
def evaluate(
    index: Annotated[Path, index_opt],
    questions: Annotated[Path, Option("--questions", help="JSON array of {question, gold}.", dir_okay=False)],
    report: Annotated[Path | None, Option("--report", "-r", help="Report file to write.", dir_okay=False)] = None,
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    workers: Annotated[int | None, workers_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Score a question file against an index."""
    _setup(verbose)

    with _data_errors():
        result = evaluate_run(load_index(index), load_questions(questions), load_resources(lexicon), workers)

        if report is not None:
            save_report(result, report)

    table = Table("Question", "Rank", "Score", "Answers", title=result.label)

    for r in result.results:
        table.add_row(r.question, str(r.rank or "-"), str(r.score), " ".join(r.answers))

    out.print(table)
    out.print(f"Mean: {result.mean} ({float(result.mean):.3f}), pas de réponse: {result.zero_count}")


@app.command()
def compare(
    corpus: Annotated[Path, Option("--corpus", help="Corpus file of `#DOC <id>` blocks.", dir_okay=False)],
    questions: Annotated[Path, Option("--questions", help="JSON array of {question, gold}.", dir_okay=False)],
    out_dir: Annotated[
        Path | None, Option("--out-dir", "-o", help="Directory receiving one report per condition.", file_okay=False)
    ] = None,
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    workers: Annotated[int | None, workers_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Evaluate the four enrichment presets on one corpus."""
    _setup(verbose)

    with _data_errors():
        reports = compare_conditions(corpus, load_questions(questions), load_resources(lexicon), out_dir, workers)

    table = Table("Condition", "Score", "Pas de réponse", title="Comparaison")

    for report in reports.values():
        table.add_row(report.label, f"{float(report.mean):.3f}", str(report.zero_count))

    out.print(table)


@app.command()
def rules(
    lexicon: Annotated[Path | None, lexicon_opt] = None,
    verbose: Annotated[int, verbose_opt] = 0,
) -> None:
    """Print the disambiguation rules compiled from the sense dictionary."""
    _setup(verbose)

    with _data_errors():
        resources: LexicalResources = load_resources(lexicon)
        lines = dump_rules(resources.rules)

    for line in lines:
        out.print(line, markup=False)


def main(argv: list[str] | None = None) -> None:
    """Run the command line. Usage errors exit with 1, data errors with 2."""
    try:
        code = app(args=argv, prog_name="enrichqa", standalone_mode=False)
    except (UsageError, Abort) as e:
        if callable(show := getattr(e, "show", None)):
            show()
        sys.exit(1)
    except EnrichQAError as e:
        logger.error("%s", e)
        sys.exit(2)

    sys.exit(code if isinstance(code, int) else 0)
