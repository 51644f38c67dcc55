from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fixture_corpus_dir() -> Path:
    return DATA_DIR / "fixture_corpus"


@pytest.fixture(scope="session")
def conformance_rows() -> list[dict[str, str]]:
    """Rows of the frozen stemmer-behaviour table."""
    lines = (DATA_DIR / "stemmer_conformance.tsv").read_text().splitlines()
    rows = []
    header: list[str] | None = None
    for line in lines:
        if not line.strip() or line.startswith("#"):
            continue
        if header is None:
            header = line.split("\t")
            continue
        values = line.split("\t")
        values += [""] * (len(header) - len(values))
        rows.append(dict(zip(header, values)))
    assert len(rows) == 23
    return rows


@pytest.fixture(scope="session")
def lexicon_words() -> list[str]:
    words = (DATA_DIR / "lexicon_50k.txt").read_text().split()
    assert len(words) >= 50_000
    return words
