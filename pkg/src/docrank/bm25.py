"""Inverted index over content tokens with BM25 scoring.

IDF uses Robertson's non-negative form ln((N - df + 0.5)/(df + 0.5) + 1).
Duplicate query terms are scored once (queries are keyword sets).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DuplicateDocError, EmptyCorpusError, UnknownDocError


@dataclass(frozen=True)
class Bm25Params:
    k1: float = 1.5
    b: float = 0.75

    def __post_init__(self):
        if self.k1 < 0:
            raise ValueError("k1 must be >= 0")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError("b must be in [0, 1]")


@dataclass
class Bm25Index:
    n_docs: int
    avg_doc_len: float
    doc_len: dict[str, int]
    postings: dict[str, dict[str, int]]  # term -> doc_id -> tf
    params: Bm25Params = field(default_factory=Bm25Params)


def build_index(docs: list[tuple[str, list[str]]], params: Bm25Params | None = None) -> Bm25Index:
    """Build an index from (doc_id, content_tokens) pairs."""
    if not docs:
        raise EmptyCorpusError("cannot index an empty corpus")
    params = params or Bm25Params()
    doc_len: dict[str, int] = {}
    postings: dict[str, dict[str, int]] = {}
    for doc_id, tokens in docs:
        if doc_id in doc_len:
            raise DuplicateDocError(f"duplicate doc_id {doc_id!r}")
        doc_len[doc_id] = len(tokens)
        for t in tokens:
            postings.setdefault(t, {})
            postings[t][doc_id] = postings[t].get(doc_id, 0) + 1
    n = len(doc_len)
    return Bm25Index(
        n_docs=n,
        avg_doc_len=sum(doc_len.values()) / n,
        doc_len=doc_len,
        postings=postings,
        params=params,
    )


def _idf(index: Bm25Index, term: str) -> float:
    df = len(index.postings.get(term, ()))
    return math.log((index.n_docs - df + 0.5) / (df + 0.5) + 1.0)


def bm25_score(index: Bm25Index, query_terms: list[str], doc_id: str) -> float:
    if doc_id not in index.doc_len:
        raise UnknownDocError(f"unknown doc_id {doc_id!r}")
    k1, b = index.params.k1, index.params.b
    dl = index.doc_len[doc_id]
    score = 0.0
    for term in set(query_terms):
        tf = index.postings.get(term, {}).get(doc_id, 0)
        if tf == 0:
            continue
        norm = k1 * (1.0 - b + b * dl / index.avg_doc_len)
        score += _idf(index, term) * tf * (k1 + 1.0) / (tf + norm)
    return score


def bm25_rank(index: Bm25Index, query_terms: list[str]) -> list[tuple[str, float]]:
    """All documents ordered by descending score, ties by ascending doc_id."""
    scored = [(doc_id, bm25_score(index, query_terms, doc_id)) for doc_id in index.doc_len]
    scored.sort(key=lambda e: (-e[1], e[0]))
    return scored
