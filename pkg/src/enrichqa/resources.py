"""Everything loaded from a lexicon directory, with the bundled assets as fallback."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from importlib import resources
from logging import getLogger
from pathlib import Path

from .errors import DataFormatError
from .lexicon import (
    RewriteSchema,
    SenseDictionary,
    SynonymGroup,
    SynonymIndex,
    load_rewrite_schemas,
    load_sense_dictionary,
    load_synonym_groups,
)
from .morpho import FullFormLexicon, load_fullform_lexicon
from .pipeline import AnalysisPipeline
from .settings import InterrogativeEntry, InterrogativeTable
from .syntax import Grammar
from .utils import read_json_model, read_text, validate_records
from .wsd import RuleSet, compile_rules

__all__ = ["LexicalResources", "assets_dir", "bundled_resources", "load_resources"]

logger = getLogger(__name__)

REQUIRED = ("senses.json", "synonyms.json", "schemas.json")


def assets_dir() -> Path:
    return Path(str(resources.files("enrichqa.assets")))


@dataclass(frozen=True, eq=False)
class LexicalResources:
    dictionary: SenseDictionary
    synonyms: SynonymIndex
    schemas: tuple[RewriteSchema, ...]
    fullforms: FullFormLexicon
    grammar: Grammar
    interrogatives: InterrogativeTable
    abbreviations: frozenset[str] = frozenset()
    source: Path | None = None
    """Lexicon directory the resources were read from. `None` for the bundled ones."""

    @cached_property
    def pipeline(self) -> AnalysisPipeline:
        return AnalysisPipeline(self.fullforms, self.grammar, self.abbreviations)

    @cached_property
    def rules(self) -> RuleSet:
        return compile_rules(self.dictionary, self.pipeline)

    @property
    def label(self) -> str:
        return str(self.source) if self.source else "bundled"


def _pick(directory: Path, name: str) -> Path:
    return path if (path := directory / name).is_file() else assets_dir() / name


def _read_abbreviations(path: Path) -> frozenset[str]:
    return frozenset(
        line.strip().rstrip(".") for line in read_text(path).splitlines() if line.strip() and not line.startswith("#")
    )


def _read_synonyms(directory: Path) -> list[SynonymGroup]:
    groups = load_synonym_groups(directory / "synonyms.json")

    if (extra := directory / "synonyms.d").is_dir():
        for path in sorted(extra.iterdir()):
            groups.extend(load_synonym_groups(path))

    return groups


def load_resources(directory: Path | None = None) -> LexicalResources:
    """
    Load the lexical resources of a lexicon directory.

    `senses.json`, `synonyms.json` and `schemas.json` must exist in `directory`. The full-form lexicon, grammar,
    interrogative table and abbreviation list fall back to the bundled ones when absent. Files under
    `synonyms.d/` are read by the synonym source accepting their suffix.

    Raises:
        DataFormatError: A required file is missing or any file is malformed.
    """
    if directory is None:
        return bundled_resources()

    if not directory.is_dir():
        raise DataFormatError("lexicon directory not found", directory)

    for name in REQUIRED:
        if not (directory / name).is_file():
            raise DataFormatError("required lexicon file not found", directory / name)

    loaded = LexicalResources(
        dictionary=load_sense_dictionary(directory / "senses.json"),
        synonyms=SynonymIndex(_read_synonyms(directory)),
        schemas=tuple(load_rewrite_schemas(directory / "schemas.json")),
        fullforms=load_fullform_lexicon(_pick(directory, "fullforms.json")),
        grammar=read_json_model(_pick(directory, "grammar.json"), Grammar),
        interrogatives=InterrogativeTable(
            entries=tuple(e for _, e in validate_records(_pick(directory, "interrogatives.json"), InterrogativeEntry))
        ),
        abbreviations=_read_abbreviations(_pick(directory, "abbreviations.txt")),
        source=None if directory == assets_dir() else directory,
    )

    logger.info(
        "Loaded %d headwords, %d synonym groups, %d rewrite schemas from %s",
        len(loaded.dictionary),
        len(loaded.synonyms),
        len(loaded.schemas),
        loaded.label,
    )

    return loaded


@cache
def bundled_resources() -> LexicalResources:
    return load_resources(assets_dir())
