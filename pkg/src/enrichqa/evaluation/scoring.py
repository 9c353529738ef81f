from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..index import UnitRef
from ..matcher import MatchResult
from .models import MAX_RANK, GoldQuestion

__all__ = ["rank_of", "score_question"]


def _units(ranked: Sequence[MatchResult | UnitRef]) -> list[UnitRef]:
    return [r.unit if isinstance(r, MatchResult) else r for r in ranked[:MAX_RANK]]


def rank_of(ranked: Sequence[MatchResult | UnitRef], gold: GoldQuestion | Iterable[UnitRef]) -> int | None:
    """1-based rank of the first correct answer among the first five."""
    if not isinstance(gold, GoldQuestion):
        gold = GoldQuestion(question="?", gold=tuple(gold))

    return next((k for k, unit in enumerate(_units(ranked), 1) if gold.accepts(unit)), None)


def score_question(ranked: Sequence[MatchResult | UnitRef], gold: GoldQuestion | Iterable[UnitRef]) -> Fraction:
    """`1/k` for a first correct answer at rank `k`, 0 when none of the first five is correct."""
    rank = rank_of(ranked, gold)
    return Fraction(1, rank) if rank is not None else Fraction(0)
