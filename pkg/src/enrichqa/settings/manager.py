from __future__ import annotations

from logging import getLogger
from pathlib import Path

from ..enums import Condition
from ..utils import read_json_model
from .models import PRESETS, PipelineSettings

__all__ = ["load_settings"]

logger = getLogger(__name__)


def load_settings(value: str | Path | Condition | PipelineSettings) -> PipelineSettings:
    """
    Resolve a `--config` value into pipeline settings.

    Args:
        value: A preset name (`plancher`, `syn-no-sem`, `syn-sem`, `all`), a path to a JSON file holding
            `PipelineSettings` fields, or settings already built.

    Raises:
        ValueError: `value` is neither a preset nor a `.json` path.
        DataFormatError: The JSON file is missing or invalid.
    """
    match value:
        case PipelineSettings():
            return value
        case Condition():
            return PRESETS[value]
        case Path():
            path = value
        case str() if value in Condition:
            return PRESETS[Condition(value)]
        case str() if value.endswith(".json"):
            path = Path(value)
        case _:
            raise ValueError(
                f"Unknown configuration {value!r}: expected one of {', '.join(Condition)} or a .json file"
            )

    settings = read_json_model(path, PipelineSettings)
    logger.debug("Loaded custom settings from %s: %s", path, settings)

    return settings
