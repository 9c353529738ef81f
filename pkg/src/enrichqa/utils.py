from __future__ import annotations

import json
from collections.abc import Callable
from logging import getLogger
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from .errors import DataFormatError

logger = getLogger(__name__)


def line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1


def read_text(path: Path) -> str:
    try:
        return path.read_text("utf-8-sig")
    except FileNotFoundError:
        raise DataFormatError("file not found", path) from None
    except UnicodeDecodeError as e:
        raise DataFormatError(f"not valid UTF-8 ({e.reason})", path) from None


def read_json_records(path: Path) -> list[tuple[int, Any]]:
    """
    Read a top-level JSON array and keep the line number of every element.

    An empty (or whitespace-only) file is an empty array.

    Raises:
        DataFormatError: The file is not a JSON array.
    """
    text = read_text(path)
    decoder = json.JSONDecoder()
    records = list[tuple[int, Any]]()

    def skip(i: int) -> int:
        while i < len(text) and text[i].isspace():
            i += 1
        return i

    i = skip(0)

    if i == len(text):
        return records

    if text[i] != "[":
        raise DataFormatError("expected a JSON array", path, line_of(text, i))

    i = skip(i + 1)

    if i < len(text) and text[i] == "]":
        return records

    while True:
        try:
            obj, end = decoder.raw_decode(text, i)
        except json.JSONDecodeError as e:
            raise DataFormatError(e.msg, path, e.lineno) from None

        records.append((line_of(text, i), obj))

        i = skip(end)

        if i >= len(text):
            raise DataFormatError("unterminated array", path, line_of(text, i))
        if text[i] == "]":
            break
        if text[i] != ",":
            raise DataFormatError(f"expected ',' or ']' but found {text[i]!r}", path, line_of(text, i))

        i = skip(i + 1)

    if (end := skip(i + 1)) != len(text):
        raise DataFormatError("trailing data after array", path, line_of(text, end))

    return records


def validate_records[M: BaseModel](path: Path, model: type[M]) -> list[tuple[int, M]]:
    """Validate each array element of a JSON file against `model`, reporting the element's line on failure."""
    out = list[tuple[int, M]]()

    for line, obj in read_json_records(path):
        try:
            out.append((line, model.model_validate(obj)))
        except ValidationError as e:
            raise DataFormatError(_first_error(e), path, line) from None

    return out


def read_json_model[M: BaseModel](path: Path, model: type[M]) -> M:
    text = read_text(path)

    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise DataFormatError(e.msg, path, e.lineno) from None
    except ValidationError as e:
        raise DataFormatError(_first_error(e), path) from None


def write_json(path: Path, dump: Callable[[], str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump(), encoding="utf-8")
    logger.debug("Wrote %s", path)


def _first_error(e: ValidationError) -> str:
    err = e.errors(include_url=False)[0]
    loc = ".".join(str(p) for p in err["loc"])
    return f"{loc}: {err['msg']}" if loc else err["msg"]
