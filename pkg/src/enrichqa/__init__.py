import os

from .errors import (
    DataFormatError,
    EnrichQAError,
    IndexVersionError,
    LexiconValidationError,
    PatternSyntaxError,
    UnanalyzableQuestionError,
    UnknownSenseError,
)
from .evaluation import compare_conditions, evaluate_run, score_question
from .index import CorpusIndex, build_index, load_index, save_index
from .matcher import MatchResult, match
from .question import LocalStructure, analyze_question
from .resources import LexicalResources, bundled_resources, load_resources
from .settings import PipelineSettings, load_settings

os.environ["PYDANTIC_ERRORS_INCLUDE_URL"] = "false"

__all__ = [
    "CorpusIndex",
    "DataFormatError",
    "EnrichQAError",
    "IndexVersionError",
    "LexicalResources",
    "LexiconValidationError",
    "LocalStructure",
    "MatchResult",
    "PatternSyntaxError",
    "PipelineSettings",
    "UnanalyzableQuestionError",
    "UnknownSenseError",
    "analyze_question",
    "build_index",
    "bundled_resources",
    "compare_conditions",
    "evaluate_run",
    "load_index",
    "load_resources",
    "load_settings",
    "match",
    "save_index",
    "score_question",
]
