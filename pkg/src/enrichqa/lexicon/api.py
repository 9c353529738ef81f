from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence
from pathlib import Path
from typing import ClassVar, NamedTuple

from jetpytools import to_arr

from .models import SynonymGroup
from .specs import hookimpl

__all__ = ["SynonymSource", "hookimpl"]


class SynonymSource(ABC):
    """Reader for one external synonym dictionary format."""

    class FileFilter(NamedTuple):
        """Named tuple describing the files a source reads."""

        label: str
        """Human readable name of the format."""
        suffix: str | Sequence[str]
        """The file extension suffix."""

    filter: ClassVar[FileFilter]

    def accepts(self, path: Path) -> bool:
        return path.suffix.lstrip(".").lower() in to_arr(self.filter.suffix)

    @abstractmethod
    def parse(self, path: Path) -> Sequence[SynonymGroup]: ...
