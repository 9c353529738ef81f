"""Exceptions raised by enrichqa."""

from __future__ import annotations

from pathlib import Path

__all__ = [
    "DataFormatError",
    "EnrichQAError",
    "IndexVersionError",
    "LexiconValidationError",
    "PatternSyntaxError",
    "UnanalyzableQuestionError",
    "UnknownSenseError",
]


class EnrichQAError(Exception):
    """Base class for every error raised on purpose by enrichqa."""


class DataFormatError(EnrichQAError, ValueError):
    """A resource, corpus or index file could not be parsed."""

    path: Path | None
    line: int | None
    reason: str

    def __init__(self, reason: str, path: Path | str | None = None, line: int | None = None) -> None:
        self.path = Path(path) if path is not None else None
        self.line = line
        self.reason = reason

        location = "" if self.path is None else f"{self.path}:{line}: " if line is not None else f"{self.path}: "

        super().__init__(f"{location}{reason}")


class LexiconValidationError(DataFormatError):
    """A lexicon entry breaks one of the lexicon invariants."""

    entry: str

    def __init__(self, entry: str, reason: str, path: Path | str | None = None, line: int | None = None) -> None:
        self.entry = entry
        super().__init__(f"entry {entry!r}: {reason}", path, line)


class IndexVersionError(DataFormatError):
    """The index file was written by an incompatible format version."""

    def __init__(self, found: object, expected: int, path: Path | str | None = None) -> None:
        super().__init__(f"unsupported index version {found!r} (expected {expected})", path)


class UnknownSenseError(EnrichQAError, KeyError):
    """A (lemma, pos, sense_id) triple is not in the sense dictionary."""

    def __init__(self, lemma: str, pos: str, sense_id: int | None = None) -> None:
        self.lemma = lemma
        self.pos = pos
        self.sense_id = sense_id

        super().__init__(lemma, pos, sense_id)

    def __str__(self) -> str:
        if self.sense_id is None:
            return f"Unknown headword ({self.lemma}, {self.pos})"
        return f"Unknown sense ({self.lemma}, {self.pos}, {self.sense_id})"


class PatternSyntaxError(EnrichQAError, ValueError):
    """A dependency pattern does not follow the NAME[FEAT](slot,...) surface syntax."""

    def __init__(self, text: str, reason: str) -> None:
        self.text = text
        super().__init__(f"Invalid dependency pattern {text!r}: {reason}")


class UnanalyzableQuestionError(EnrichQAError, ValueError):
    """Question analysis did not produce a usable local structure."""

    def __init__(self, question: str, reason: str = "no dependency") -> None:
        self.question = question
        self.reason = reason
        super().__init__(f"unanalyzable question: {question!r} ({reason})")
