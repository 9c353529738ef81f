from __future__ import annotations

import re
from dataclasses import dataclass
from logging import getLogger
from pathlib import Path

from ..errors import DataFormatError
from ..utils import read_text

__all__ = ["Document", "parse_corpus", "read_corpus"]

logger = getLogger(__name__)

_HEADER_RE = re.compile(r"^#DOC(?:\s+(?P<id>\S+))?\s*$")


@dataclass(frozen=True, slots=True)
class Document:
    doc_id: str
    paragraphs: tuple[str, ...]
    line: int
    """Line of the `#DOC` header."""


def parse_corpus(text: str, path: Path | None = None) -> list[Document]:
    """
    Split corpus text into documents.

    A document starts at a `#DOC <id>` line; its paragraphs are separated by blank lines.

    Raises:
        DataFormatError: Text before the first header, a header without id, or a repeated id.
    """
    documents = list[Document]()
    seen = dict[str, int]()

    doc_id: str | None = None
    doc_line = 0
    paragraphs = list[str]()
    current = list[str]()

    def close_paragraph() -> None:
        if current:
            paragraphs.append("\n".join(current))
            current.clear()

    def close_document() -> None:
        close_paragraph()
        if doc_id is not None:
            documents.append(Document(doc_id, tuple(paragraphs), doc_line))
        paragraphs.clear()

    for n, line in enumerate(text.splitlines(), 1):
        if m := _HEADER_RE.match(line.strip()):
            if not m["id"]:
                raise DataFormatError("#DOC header without a document id", path, n)
            if m["id"] in seen:
                raise DataFormatError(f"document id {m['id']!r} already used on line {seen[m['id']]}", path, n)

            close_document()
            doc_id, doc_line = m["id"], n
            seen[doc_id] = n
        elif not line.strip():
            close_paragraph()
        elif doc_id is None:
            raise DataFormatError("text before the first #DOC header", path, n)
        else:
            current.append(line.strip())

    close_document()

    return documents


def read_corpus(path: Path) -> list[Document]:
    """
    Raises:
        DataFormatError: The file is missing, not UTF-8 or malformed.
    """
    documents = parse_corpus(read_text(path), path)
    logger.debug("Read %d documents from %s", len(documents), path)

    return documents
