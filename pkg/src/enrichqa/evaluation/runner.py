"""Question files, single runs and the four-condition comparison."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from pathlib import Path

from ..enums import Condition
from ..errors import UnanalyzableQuestionError
from ..index import CorpusIndex, build_index, read_corpus, save_index
from ..matcher import match
from ..question import analyze_question
from ..resources import LexicalResources
from ..settings import PRESETS, PipelineSettings
from ..utils import validate_records, write_json
from .models import GoldQuestion, QuestionResult, RunReport
from .scoring import rank_of, score_question

__all__ = [
    "compare_conditions",
    "evaluate_condition",
    "evaluate_question",
    "evaluate_run",
    "load_questions",
    "save_report",
]

logger = getLogger(__name__)


def load_questions(path: Path) -> list[GoldQuestion]:
    """
    Raises:
        DataFormatError: The file is missing, not a JSON array, or an entry has no gold answer.
    """
    return [q for _, q in validate_records(path, GoldQuestion)]


def evaluate_question(gold: GoldQuestion, index: CorpusIndex, resources: LexicalResources) -> QuestionResult:
    try:
        local = analyze_question(gold.question, resources)
    except UnanalyzableQuestionError:
        logger.warning("No structure for %r, scored 0", gold.question)
        return QuestionResult(question=gold.question, unanalyzable=True)

    ranked = match(local, index, resources)

    return QuestionResult(
        question=gold.question,
        answers=tuple(str(r.unit) for r in ranked),
        bindings=tuple(r.answer for r in ranked),
        rank=rank_of(ranked, gold),
        score=score_question(ranked, gold),
    )


def evaluate_run(
    index: CorpusIndex, questions: Sequence[GoldQuestion], resources: LexicalResources, workers: int | None = None
) -> RunReport:
    """Answer and score every question. Questions are independent and evaluated in parallel."""
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="Evaluator") as pool:
        results = tuple(pool.map(lambda q: evaluate_question(q, index, resources), questions))

    report = RunReport.from_results(index.settings, results)

    logger.info(
        "%s: mean %s (%.3f), %d without answer out of %d",
        report.label,
        report.mean,
        float(report.mean),
        report.zero_count,
        len(results),
    )

    return report


def evaluate_condition(
    settings: PipelineSettings | Condition,
    corpus: Path,
    questions: Sequence[GoldQuestion],
    resources: LexicalResources,
    index_out: Path | None = None,
    workers: int | None = None,
) -> RunReport:
    """Build the index of `corpus` under `settings`, optionally save it, and evaluate `questions` against it."""
    if isinstance(settings, Condition):
        settings = PRESETS[settings]

    index = build_index(read_corpus(corpus), settings, resources, workers)

    if index_out is not None:
        save_index(index, index_out)

    return evaluate_run(index, questions, resources, workers)


def save_report(report: RunReport, path: Path) -> None:
    write_json(path, lambda: report.model_dump_json(indent=2))


def compare_conditions(
    corpus: Path,
    questions: Sequence[GoldQuestion],
    resources: LexicalResources,
    out_dir: Path | None = None,
    workers: int | None = None,
) -> dict[Condition, RunReport]:
    """
    Evaluate the four enrichment presets on one corpus.

    With `out_dir`, one `<condition>.json` report is written per condition.
    """
    documents = read_corpus(corpus)
    reports = dict[Condition, RunReport]()

    for condition in Condition:
        index = build_index(documents, PRESETS[condition], resources, workers)
        reports[condition] = evaluate_run(index, questions, resources, workers)

        if out_dir is not None:
            save_report(reports[condition], out_dir / f"{condition}.json")

    return reports
