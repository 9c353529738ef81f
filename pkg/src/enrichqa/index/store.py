from __future__ import annotations

import json
from logging import getLogger
from pathlib import Path

from pydantic import ValidationError

from ..errors import DataFormatError, IndexVersionError
from ..utils import read_text, write_json
from .models import INDEX_VERSION, CorpusIndex

__all__ = ["load_index", "save_index"]

logger = getLogger(__name__)


def save_index(index: CorpusIndex, path: Path) -> None:
    write_json(path, lambda: index.model_dump_json(indent=1))
    logger.debug("Saved index (%d sentences) to %s", len(index.records), path)


def load_index(path: Path) -> CorpusIndex:
    """
    Raises:
        DataFormatError: The file is missing or is not an index.
        IndexVersionError: The index was written in another format version.
    """
    try:
        raw = json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise DataFormatError(e.msg, path, e.lineno) from None

    if not isinstance(raw, dict):
        raise DataFormatError("not an index file", path)

    if raw.get("version") != INDEX_VERSION:
        raise IndexVersionError(raw.get("version"), INDEX_VERSION, path)

    try:
        index = CorpusIndex.model_validate(raw)
    except ValidationError as e:
        loc = ".".join(str(p) for p in e.errors()[0]["loc"])
        raise DataFormatError(f"invalid index: {e.error_count()} error(s), first at {loc}", path) from None

    logger.debug("Loaded index (%d sentences) from %s", len(index.records), path)

    return index
