from importlib.resources import files
from pathlib import Path

import pytest

from tweetrules.corpus import load_dataset
from tweetrules.lexicon import parse_lexicon
from tweetrules.rules import parse_rules

DATA_DIR = Path(str(files("tweetrules") / "data"))
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def demo():
    """Paths to the shipped demo resources, as strings for CLI argv."""
    return {
        "lex": str(DATA_DIR / "demo.lex"),
        "rules": str(DATA_DIR / "demo.rules"),
        "corpus": str(DATA_DIR / "demo_corpus.tsv"),
        "heldout": str(DATA_DIR / "demo_heldout.tsv"),
    }


@pytest.fixture(scope="session")
def demo_lexicon():
    return parse_lexicon(DATA_DIR / "demo.lex")


@pytest.fixture(scope="session")
def demo_rules():
    return parse_rules(DATA_DIR / "demo.rules")


@pytest.fixture(scope="session")
def demo_corpus():
    return load_dataset(DATA_DIR / "demo_corpus.tsv", has_labels=True)


@pytest.fixture
def write(tmp_path):
    """Write ``content`` to a file under tmp_path and return its path."""
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write
