"""Scoring and evaluation runs."""

from .models import GoldQuestion, QuestionResult, RunReport, Score
from .runner import (
    compare_conditions,
    evaluate_condition,
    evaluate_question,
    evaluate_run,
    load_questions,
    save_report,
)
from .scoring import rank_of, score_question

__all__ = [
    "GoldQuestion",
    "QuestionResult",
    "RunReport",
    "Score",
    "compare_conditions",
    "evaluate_condition",
    "evaluate_question",
    "evaluate_run",
    "load_questions",
    "rank_of",
    "save_report",
    "score_question",
]
