from __future__ import annotations

from collections.abc import Sequence
from functools import cache
from logging import getLogger
from pathlib import Path

import pluggy
from jetpytools import flatten

from ..errors import DataFormatError
from ..utils import read_text, validate_records
from . import specs
from .api import SynonymSource
from .models import SynonymGroup, SynonymGroupRecord

__all__ = ["JSONSynonymSource", "ThesaurusSynonymSource", "load_synonym_groups", "synonym_sources"]

logger = getLogger(__name__)


class JSONSynonymSource(SynonymSource):
    filter = SynonymSource.FileFilter("Synonym groups (JSON)", "json")

    def parse(self, path: Path) -> list[SynonymGroup]:
        groups = list[SynonymGroup]()

        for line, record in validate_records(path, SynonymGroupRecord):
            try:
                groups.append(SynonymGroup(frozenset(m.strip() for m in record.members), record.source))
            except ValueError as e:
                raise DataFormatError(str(e), path, line) from None

        return groups


class ThesaurusSynonymSource(SynonymSource):
    """Plain thesaurus: one group per line, members separated by `;`, named after the file stem."""

    filter = SynonymSource.FileFilter("Thesaurus text", ["txt", "ths"])

    def parse(self, path: Path) -> list[SynonymGroup]:
        groups = list[SynonymGroup]()

        for n, line in enumerate(read_text(path).splitlines(), 1):
            line = line.strip()

            if not line or line.startswith("#"):
                continue

            members = frozenset(m.strip() for m in line.split(";") if m.strip())

            try:
                groups.append(SynonymGroup(members, path.stem))
            except ValueError as e:
                raise DataFormatError(str(e), path, n) from None

        return groups


internal_sources: list[SynonymSource] = [JSONSynonymSource(), ThesaurusSynonymSource()]

manager = pluggy.PluginManager("enrichqa.synonyms")


@cache
def load_external_sources() -> None:
    manager.add_hookspecs(specs)
    n = manager.load_setuptools_entrypoints("enrichqa.synonyms")
    logger.debug("Loaded %d external synonym sources", n)


def synonym_sources() -> list[SynonymSource]:
    """Bundled sources followed by those registered by plugins."""
    load_external_sources()

    return internal_sources + list(flatten(manager.hook.enrichqa_register_synonym_source()))


def load_synonym_groups(path: Path, sources: Sequence[SynonymSource] | None = None) -> list[SynonymGroup]:
    """
    Read a synonym dictionary with the first source that accepts its suffix.

    Raises:
        DataFormatError: No source reads this kind of file, or the file is malformed.
    """
    if sources is None:
        sources = synonym_sources()

    for source in sources:
        if source.accepts(path):
            groups = list(source.parse(path))
            logger.debug("Read %d synonym groups from %s (%s)", len(groups), path, source.filter.label)
            return groups

    raise DataFormatError(f"no synonym source reads {path.suffix or 'extension-less'} files", path)
