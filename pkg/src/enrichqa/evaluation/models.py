from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Self

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

from ..index import UnitRef
from ..settings import PipelineSettings

__all__ = ["GoldQuestion", "QuestionResult", "RunReport", "Score"]

MAX_RANK = 5

type Score = Annotated[Fraction, PlainValidator(lambda v: Fraction(v)), PlainSerializer(str, return_type=str)]
"""A rational score, written as `"1/3"` in reports."""


class GoldQuestion(BaseModel):
    """One line of a question file: `{"question": "...", "gold": [["d01", 3]]}`."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    question: str = Field(min_length=1)
    gold: tuple[UnitRef, ...] = Field(min_length=1)
    """Acceptable answer units. A bare document id accepts any sentence of it."""

    def accepts(self, unit: UnitRef) -> bool:
        return any(unit == g or (g.number is None and unit.doc_id == g.doc_id) for g in self.gold)


class QuestionResult(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    question: str
    answers: tuple[str, ...] = ()
    """Ranked answer units, best first."""
    bindings: tuple[str, ...] = ()
    """Focus filler of each answer."""
    rank: int | None = Field(None, ge=1, le=MAX_RANK)
    """Rank of the first correct answer."""
    score: Score = Fraction(0)
    unanalyzable: bool = False

    @model_validator(mode="after")
    def _check_score(self) -> Self:
        expected = Fraction(1, self.rank) if self.rank is not None else Fraction(0)

        if self.score != expected:
            raise ValueError(f"score {self.score} does not follow from rank {self.rank}")

        return self


class RunReport(BaseModel):
    """Scores of one question file against one index."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    condition: str
    """Preset name, or `custom` for other settings."""
    label: str
    settings: PipelineSettings
    results: tuple[QuestionResult, ...] = ()
    mean: Score = Fraction(0)
    zero_count: int = 0
    """Questions scoring 0 ("pas de réponse")."""
    empty: bool = False
    """No question was evaluated; `mean` is reported as 0."""

    @classmethod
    def from_results(cls, settings: PipelineSettings, results: tuple[QuestionResult, ...]) -> RunReport:
        condition = settings.condition

        return cls(
            condition=condition.value if condition else "custom",
            label=condition.label if condition else "Personnalisé",
            settings=settings,
            results=results,
            mean=sum((r.score for r in results), Fraction(0)) / len(results) if results else Fraction(0),
            zero_count=sum(r.score == 0 for r in results),
            empty=not results,
        )

    @model_validator(mode="after")
    def _check_totals(self) -> Self:
        if self.empty != (not self.results):
            raise ValueError("empty must be set exactly when there are no results")

        if self.results:
            if self.mean != sum((r.score for r in self.results), Fraction(0)) / len(self.results):
                raise ValueError("mean does not match the per-question scores")
        elif self.mean != 0:
            raise ValueError("an empty report has a mean of 0")

        if self.zero_count != sum(r.score == 0 for r in self.results):
            raise ValueError("zero_count does not match the per-question scores")

        return self

    @property
    def total(self) -> Fraction:
        return sum((r.score for r in self.results), Fraction(0))
