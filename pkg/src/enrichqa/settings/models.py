"""Settings models for enrichqa."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..enums import Condition, Granularity

__all__ = ["PRESETS", "InterrogativeEntry", "InterrogativeTable", "PipelineSettings"]


class PipelineSettings(BaseModel):
    """Enrichment switches and retrieval parameters stored alongside every index."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    synonyms: bool = True
    """Widen slots with synonym alternates."""
    sense_filter: bool = True
    """Admit synonyms only for disambiguated occurrences, filtered by semantic traits."""
    derivations: bool = True
    """Add dependencies rewritten through derivatives."""
    granularity: Granularity = Granularity.SENTENCE
    """Default unit returned by queries."""
    max_answers: int = Field(5, ge=1)
    """Number of ranked answers kept per question."""

    @classmethod
    def from_condition(cls, condition: Condition, **kwargs: object) -> PipelineSettings:
        return cls.model_validate(
            {
                "synonyms": condition.synonyms,
                "sense_filter": condition.sense_filter,
                "derivations": condition.derivations,
            }
            | kwargs
        )

    @property
    def enrichment_flags(self) -> tuple[bool, bool, bool]:
        return self.synonyms, self.sense_filter, self.derivations

    @property
    def condition(self) -> Condition | None:
        """The preset these flags correspond to, if any."""
        for condition in Condition:
            if (condition.synonyms, condition.sense_filter, condition.derivations) == self.enrichment_flags:
                return condition

        # With synonyms off the sense filter is irrelevant
        if not self.synonyms and not self.derivations:
            return Condition.PLANCHER

        return None


PRESETS: dict[Condition, PipelineSettings] = {
    condition: PipelineSettings.from_condition(condition) for condition in Condition
}


class InterrogativeEntry(BaseModel):
    """One interrogative word and the focus it produces."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    word: str
    traits: frozenset[str] = frozenset()
    """Semantic traits the answer must carry. Empty for determiners (`quel`)."""
    determiner: bool = False
    """The word introduces an explicit focus noun (`quel chef`)."""
    role: Literal["subject", "object", "adjunct"] = "subject"
    preposition: str | None = None
    """Preposition used to re-attach an adverbial interrogative (`où` -> `à`)."""

    @field_validator("word")
    @classmethod
    def _lower(cls, value: str) -> str:
        return value.strip().lower()


class InterrogativeTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: tuple[InterrogativeEntry, ...]

    def get(self, word: str) -> InterrogativeEntry | None:
        word = word.lower().rstrip("'’")
        return next((e for e in self.entries if e.word.rstrip("'’") == word), None)

    @property
    def words(self) -> frozenset[str]:
        return frozenset(e.word for e in self.entries)
