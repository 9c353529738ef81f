from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

import pluggy

if TYPE_CHECKING:
    from .api import SynonymSource

hookspec = pluggy.HookspecMarker("enrichqa.synonyms")
hookimpl = pluggy.HookimplMarker("enrichqa.synonyms")


@hookspec
def enrichqa_register_synonym_source() -> SynonymSource | Sequence[SynonymSource]:
    raise NotImplementedError
