from pathlib import Path

import pytest

from crosslang import Algebra, load_corpus, parse_language

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def oil():
    return load_corpus(CORPUS / "oil-prices")


@pytest.fixture(scope="session")
def platypus():
    return load_corpus(CORPUS / "platypus")


@pytest.fixture(scope="session")
def fixed_point_gap():
    return load_corpus(CORPUS / "fixed-point-gap")


@pytest.fixture(scope="session")
def violation():
    return load_corpus(CORPUS / "adjunction-violation")


@pytest.fixture(scope="session")
def nested():
    return load_corpus(CORPUS / "nested-grids")


@pytest.fixture(scope="session")
def twin_pair():
    """Two structurally identical three-cell languages under different names."""
    def make(name):
        text = (
            f"language {name}\n"
            "atoms: x y z\n"
            "believe: x | y | z\n"
            "believe: !(x & y)\nbelieve: !(x & z)\nbelieve: !(y & z)\n"
        )
        return Algebra.from_spec(parse_language(text))

    return make("first"), make("second")
