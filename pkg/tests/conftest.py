from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lingcomp.nlp import bundled_corpus_path, read_tagged_corpus, train_tagger

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def seed_corpus():
    return read_tagged_corpus(bundled_corpus_path())


@pytest.fixture(scope="session")
def tagger_model(seed_corpus):
    """One model trained on the full bundled corpus, shared across tests."""
    return train_tagger(seed_corpus, epochs=5, seed=1)


@pytest.fixture()
def data_dir() -> Path:
    return DATA_DIR
