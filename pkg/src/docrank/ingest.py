"""Corpus ingestion: manifest parsing, heading-based segmentation, per-section
text processing, and the persisted corpus store.

Source documents are UTF-8 text; a heading is any line starting with "# "
(0x23 0x20). Text before the first heading is discarded. Ingest is
all-or-nothing: any unreadable file aborts the whole build.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone

import numpy as np

from . import textpipe
from .embeddings import EmbeddingTable, embed_keywords
from .errors import (
    DuplicateEntryError,
    IngestError,
    ManifestEmptyError,
    NoHeadingsError,
    ParseError,
    UnknownCountryError,
)
from .textpipe import Lexicon

SNIPPET_LEN = 200
NO_COUNTRY = "none"


@dataclass(frozen=True)
class SourceEntry:
    path: str
    country: str
    title: str
    uri: str = ""


@dataclass
class CorpusManifest:
    entries: list[SourceEntry]


@dataclass(frozen=True)
class RawSection:
    doc_id: str
    country: str
    heading_text: str
    body_text: str
    uri: str


@dataclass
class ProcessedDocument:
    doc_id: str
    country: str
    heading: str
    heading_keywords: list[str]
    heading_vector: list[float]
    heading_vector_is_zero: bool
    content_tokens: list[str]
    snippet: str
    uri: str


@dataclass
class CorpusStore:
    version: int
    embedding_dim: int
    documents: list[ProcessedDocument]
    build_timestamp: str = field(default="")


def parse_manifest(manifest_file, known_countries: set[str]) -> CorpusManifest:
    """Parse a manifest JSON file: a top-level array of
    {"path", "country", "title", "uri"(optional)} objects."""
    try:
        with open(manifest_file, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed manifest JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, list):
        raise ParseError("manifest must be a JSON array")
    if not data:
        raise ManifestEmptyError("manifest has no entries")
    entries = []
    seen_paths = set()
    for i, obj in enumerate(data):
        if not isinstance(obj, dict):
            raise ParseError(f"entry {i} is not an object")
        try:
            path = obj["path"]
            country = obj["country"]
            title = obj["title"]
        except KeyError as exc:
            raise ParseError(f"entry {i} missing field {exc.args[0]!r}") from None
        if path in seen_paths:
            raise DuplicateEntryError(f"duplicate path {path!r}")
        seen_paths.add(path)
        if country != NO_COUNTRY and country not in known_countries:
            raise UnknownCountryError(f"entry {i}: unknown country code {country!r}")
        entries.append(SourceEntry(path=path, country=country, title=title, uri=obj.get("uri", "")))
    return CorpusManifest(entries=entries)


def segment_document(source_text: str, entry: SourceEntry) -> list[RawSection]:
    """Split a source file into sections at "# " heading lines.

    Body text is kept verbatim (including newlines) so that re-inserting the
    markers reproduces the file from the first heading onward.
    """
    sections: list[RawSection] = []
    heading = None
    body_lines: list[str] = []
    ordinal = 0

    def flush():
        nonlocal ordinal
        if heading is None:
            return
        ordinal += 1
        sections.append(
            RawSection(
                doc_id=f"{entry.title}#{ordinal}",
                country=entry.country,
                heading_text=heading,
                body_text="".join(body_lines),
                uri=entry.uri,
            )
        )

    for line in source_text.splitlines(keepends=True):
        if line.startswith("# "):
            flush()
            heading = line[2:].rstrip("\n")
            body_lines = []
        elif heading is not None:
            body_lines.append(line)
    flush()
    if not sections:
        raise NoHeadingsError(f"no heading markers in {entry.path!r}")
    return sections


def process_section(
    section: RawSection,
    lexicon: Lexicon,
    stopwords: set[str],
    embeddings: EmbeddingTable,
) -> ProcessedDocument:
    """Run the heading path (tokenize, tag, keyword-filter, embed) and the
    content path (tokenize, spell-correct, stopword-filter)."""
    heading_norm = textpipe.normalize(section.heading_text)
    heading_tokens = textpipe.tokenize(heading_norm, lexicon)
    tagged = textpipe.pos_tag(heading_tokens, lexicon)
    keywords = textpipe.extract_keywords(tagged)
    pooled = embed_keywords(keywords, embeddings)

    body_norm = textpipe.normalize(section.body_text)
    body_tokens = textpipe.tokenize(body_norm, lexicon)
    corrected = [textpipe.correct_spelling(t, lexicon) for t in body_tokens]
    content_tokens = textpipe.remove_stopwords(corrected, stopwords)

    return ProcessedDocument(
        doc_id=section.doc_id,
        country=section.country,
        heading=section.heading_text,
        heading_keywords=keywords,
        heading_vector=[float(x) for x in pooled.values],
        heading_vector_is_zero=pooled.is_zero,
        content_tokens=content_tokens,
        snippet=section.body_text[:SNIPPET_LEN],
        uri=section.uri,
    )


def build_corpus(
    manifest: CorpusManifest,
    lexicon: Lexicon,
    stopwords: set[str],
    embeddings: EmbeddingTable,
    version: int = 1,
) -> CorpusStore:
    """Process every section of every manifest entry, in manifest order then
    heading order. Deterministic apart from the build timestamp."""
    documents: list[ProcessedDocument] = []
    seen_ids: set[str] = set()
    for entry in manifest.entries:
        try:
            with open(entry.path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise IngestError(f"cannot read {entry.path!r}: {exc}") from None
        for section in segment_document(text, entry):
            if section.doc_id in seen_ids:
                raise IngestError(f"duplicate doc_id {section.doc_id!r} (titles must be unique)")
            seen_ids.add(section.doc_id)
            documents.append(process_section(section, lexicon, stopwords, embeddings))
    return CorpusStore(
        version=version,
        embedding_dim=embeddings.dim,
        documents=documents,
        build_timestamp=datetime.now(timezone.utc).isoformat(),
    )


def save_corpus(store: CorpusStore, path) -> None:
    payload = {
        "version": store.version,
        "embedding_dim": store.embedding_dim,
        "build_timestamp": store.build_timestamp,
        "documents": [asdict(d) for d in store.documents],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, ensure_ascii=False, indent=1)
        fh.write("\n")


def load_corpus(path) -> CorpusStore:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    docs = [ProcessedDocument(**d) for d in payload["documents"]]
    return CorpusStore(
        version=payload["version"],
        embedding_dim=payload["embedding_dim"],
        documents=docs,
        build_timestamp=payload.get("build_timestamp", ""),
    )


def heading_matrix(store: CorpusStore) -> np.ndarray:
    """Stacked heading vectors in document order, handy for bulk cosine."""
    return np.array([d.heading_vector for d in store.documents], dtype=np.float64)
