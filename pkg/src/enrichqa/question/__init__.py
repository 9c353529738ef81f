"""Question analysis into local structures."""

from .analyzer import analyze_question, drop_inversion, place_focus, reorder_chunks
from .models import Focus, LocalStructure

__all__ = ["Focus", "LocalStructure", "analyze_question", "drop_inversion", "place_focus", "reorder_chunks"]
