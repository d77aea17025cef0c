import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from docrank.embeddings import load_embeddings
from docrank.ingest import build_corpus, parse_manifest
from docrank.ranker import Retriever, load_gazetteer
from docrank.textpipe import load_lexicon, load_stopwords

FIXTURES = Path(__file__).parent / "fixtures"
THAI = FIXTURES / "thai"
HYBRID = FIXTURES / "hybrid_eval"


def abs_manifest(fixture_dir: Path, tmp_dir: Path) -> Path:
    """Rewrite a committed fixture manifest so doc paths are absolute."""
    entries = json.loads((fixture_dir / "manifest.json").read_text(encoding="utf-8"))
    root = fixture_dir.parent.parent.parent  # repo root
    for e in entries:
        e["path"] = str(root / e["path"])
    out = tmp_dir / f"{fixture_dir.name}_manifest.json"
    out.write_text(json.dumps(entries, ensure_ascii=False), encoding="utf-8")
    return out


def _stack(fixture_dir: Path, tmp_dir: Path) -> Retriever:
    lexicon = load_lexicon(fixture_dir / "lexicon.tsv")
    stops = load_stopwords(fixture_dir / "stopwords.txt")
    emb = load_embeddings(fixture_dir / "embeddings.txt")
    gaz = load_gazetteer(fixture_dir / "gazetteer.json")
    manifest = parse_manifest(abs_manifest(fixture_dir, tmp_dir), set(gaz))
    corpus = build_corpus(manifest, lexicon, stops, emb)
    return Retriever.from_store(corpus, emb, gaz, lexicon, stops)


@pytest.fixture(scope="session")
def thai_lexicon():
    return load_lexicon(THAI / "lexicon.tsv")


@pytest.fixture(scope="session")
def thai_stopwords():
    return load_stopwords(THAI / "stopwords.txt")


@pytest.fixture(scope="session")
def thai_embeddings():
    return load_embeddings(THAI / "embeddings.txt")


@pytest.fixture(scope="session")
def thai_gazetteer():
    return load_gazetteer(THAI / "gazetteer.json")


@pytest.fixture(scope="session")
def thai_retriever(tmp_path_factory):
    return _stack(THAI, tmp_path_factory.mktemp("thai"))


@pytest.fixture(scope="session")
def hybrid_retriever(tmp_path_factory):
    return _stack(HYBRID, tmp_path_factory.mktemp("hybrid"))
