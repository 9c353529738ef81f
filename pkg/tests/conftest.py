from collections.abc import Iterator
from logging import NOTSET, getLogger
from pathlib import Path

import pytest

from enrichqa.enums import Condition
from enrichqa.evaluation import GoldQuestion, load_questions
from enrichqa.index import CorpusIndex, build_index, read_corpus
from enrichqa.logging import CustomHandler
from enrichqa.resources import LexicalResources, assets_dir, bundled_resources
from enrichqa.settings import PRESETS


@pytest.fixture(scope="session")
def resources() -> LexicalResources:
    return bundled_resources()


@pytest.fixture(scope="session")
def corpus_path() -> Path:
    return assets_dir() / "corpus" / "desk.txt"


@pytest.fixture(scope="session")
def questions_path() -> Path:
    return assets_dir() / "questions.json"


@pytest.fixture(scope="session")
def questions(questions_path: Path) -> list[GoldQuestion]:
    return load_questions(questions_path)


@pytest.fixture(scope="session")
def indexes(resources: LexicalResources, corpus_path: Path) -> dict[Condition, CorpusIndex]:
    documents = read_corpus(corpus_path)
    return {condition: build_index(documents, PRESETS[condition], resources, 1) for condition in Condition}


@pytest.fixture(autouse=True)
def _reset_logging() -> Iterator[None]:
    """CLI commands install handlers on the package logger; later tests rely on propagation for caplog."""
    yield

    logger = getLogger("enrichqa")
    logger.handlers.clear()
    logger.propagate = True
    logger.setLevel(NOTSET)

    root = getLogger()
    for handler in [h for h in root.handlers if isinstance(h, CustomHandler)]:
        root.removeHandler(handler)
