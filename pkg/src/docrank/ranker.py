"""Hybrid ranking: embedding-cosine heading ranking and BM25 content ranking
fused with Borda count, with optional country-based candidate filtering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import bm25 as bm25_mod
from . import textpipe
from .bm25 import Bm25Index, Bm25Params, bm25_rank
from .embeddings import EmbeddingTable, PooledVector, cosine, embed_keywords
from .errors import DimensionError, DuplicateEntryError, EmptyQueryError, RankMismatchError
from .ingest import CorpusStore, ProcessedDocument
from .textpipe import Lexicon

MODES = ("hybrid", "bm25", "embedding")


def load_gazetteer(path) -> dict[str, list[str]]:
    """Country code -> surface forms. Surface forms must be unique across
    countries so detection is unambiguous."""
    with open(path, encoding="utf-8") as fh:
        gaz = json.load(fh)
    seen: dict[str, str] = {}
    for code, surfaces in gaz.items():
        for s in surfaces:
            if s in seen:
                raise DuplicateEntryError(f"surface {s!r} maps to both {seen[s]} and {code}")
            seen[s] = code
    return gaz


@dataclass
class QueryRepresentation:
    raw: str
    keywords: list[str]
    vector: PooledVector
    detected_countries: set[str]


@dataclass
class HybridResult:
    doc_id: str
    borda_points: int
    heading_rank: int
    content_rank: int
    final_rank: int
    heading_score: float
    content_score: float


def process_query(
    raw: str,
    lexicon: Lexicon,
    stopwords: set[str],
    embeddings: EmbeddingTable,
    gazetteer: dict[str, list[str]],
) -> QueryRepresentation:
    """normalize -> tokenize -> drop stopwords and '?' -> tag -> keywords."""
    norm = textpipe.normalize(raw)
    tokens = textpipe.tokenize(norm, lexicon)
    tokens = textpipe.remove_stopwords(tokens, stopwords)
    tagged = textpipe.pos_tag(tokens, lexicon)
    keywords = textpipe.extract_keywords(tagged)
    if not keywords:
        raise EmptyQueryError("query has no keywords after processing")
    token_set = set(tokens)
    detected = {
        code for code, surfaces in gazetteer.items() if token_set.intersection(surfaces)
    }
    return QueryRepresentation(
        raw=raw,
        keywords=keywords,
        vector=embed_keywords(keywords, embeddings),
        detected_countries=detected,
    )


def heading_rank(
    query: QueryRepresentation, docs: list[ProcessedDocument]
) -> list[tuple[str, float]]:
    """Documents by descending cosine between the query vector and each
    heading vector; ties by ascending doc_id."""
    qv = query.vector.values
    scored = []
    for d in docs:
        hv = np.asarray(d.heading_vector, dtype=np.float64)
        if hv.shape != qv.shape:
            raise DimensionError(
                f"doc {d.doc_id}: heading vector dim {hv.shape} vs query {qv.shape}"
            )
        scored.append((d.doc_id, cosine(qv, hv)))
    scored.sort(key=lambda e: (-e[1], e[0]))
    return scored


def content_rank(query: QueryRepresentation, index: Bm25Index) -> list[tuple[str, float]]:
    return bm25_rank(index, query.keywords)


def borda_aggregate(
    heading_list: list[tuple[str, float]], content_list: list[tuple[str, float]]
) -> list[HybridResult]:
    """Fuse exactly two rankings over the same doc set: a document at 1-based
    position p in a list of n earns n - p points. Point ties are broken by
    the better heading rank, then ascending doc_id."""
    h_ids = [d for d, _ in heading_list]
    c_ids = [d for d, _ in content_list]
    if set(h_ids) != set(c_ids) or len(h_ids) != len(set(h_ids)) or len(c_ids) != len(set(c_ids)):
        raise RankMismatchError("ranked lists must be permutations of the same doc set")
    n = len(h_ids)
    h_pos = {d: i + 1 for i, d in enumerate(h_ids)}
    c_pos = {d: i + 1 for i, d in enumerate(c_ids)}
    h_score = {d: s for d, s in heading_list}
    c_score = {d: s for d, s in content_list}
    results = [
        HybridResult(
            doc_id=d,
            borda_points=(n - h_pos[d]) + (n - c_pos[d]),
            heading_rank=h_pos[d],
            content_rank=c_pos[d],
            final_rank=0,
            heading_score=h_score[d],
            content_score=c_score[d],
        )
        for d in h_ids
    ]
    results.sort(key=lambda r: (-r.borda_points, r.heading_rank, r.doc_id))
    for i, r in enumerate(results):
        r.final_rank = i + 1
    return results


def filter_candidates(
    query: QueryRepresentation, docs: list[ProcessedDocument]
) -> list[ProcessedDocument]:
    """Restrict to the detected countries; fall back to all documents when
    nothing was detected or the filter would come up empty."""
    if not query.detected_countries:
        return list(docs)
    kept = [d for d in docs if d.country in query.detected_countries]
    return kept if kept else list(docs)


def _candidate_index(
    candidates: list[ProcessedDocument],
    full_index: Bm25Index,
    all_docs: int,
    global_stats: bool,
) -> Bm25Index:
    if len(candidates) == all_docs:
        return full_index
    if global_stats:
        # keep collection statistics, restrict the doc set
        sub_ids = {d.doc_id for d in candidates}
        return Bm25Index(
            n_docs=full_index.n_docs,
            avg_doc_len=full_index.avg_doc_len,
            doc_len={d: l for d, l in full_index.doc_len.items() if d in sub_ids},
            postings={
                t: {d: tf for d, tf in post.items() if d in sub_ids}
                for t, post in full_index.postings.items()
            },
            params=full_index.params,
        )
    return bm25_mod.build_index(
        [(d.doc_id, d.content_tokens) for d in candidates], full_index.params
    )


def retrieve(
    raw_query: str,
    k: int,
    corpus: CorpusStore,
    index: Bm25Index,
    embeddings: EmbeddingTable,
    gazetteer: dict[str, list[str]],
    lexicon: Lexicon,
    stopwords: set[str],
    mode: str = "hybrid",
    global_stats: bool = False,
) -> tuple[list[HybridResult], QueryRepresentation]:
    """Full retrieval: query processing, country filtering, per-mode ranking,
    Borda fusion (hybrid mode), truncation to k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    query = process_query(raw_query, lexicon, stopwords, embeddings, gazetteer)
    candidates = filter_candidates(query, corpus.documents)

    if mode == "embedding":
        ranked = heading_rank(query, candidates)
        results = [
            HybridResult(d, 0, i + 1, 0, i + 1, s, 0.0) for i, (d, s) in enumerate(ranked)
        ]
    else:
        sub_index = _candidate_index(candidates, index, len(corpus.documents), global_stats)
        if mode == "bm25":
            ranked = content_rank(query, sub_index)
            results = [
                HybridResult(d, 0, 0, i + 1, i + 1, 0.0, s) for i, (d, s) in enumerate(ranked)
            ]
        else:
            results = borda_aggregate(
                heading_rank(query, candidates), content_rank(query, sub_index)
            )
    return results[:k], query


@dataclass
class Retriever:
    """Bundles the immutable pieces a query needs; safe for concurrent reads."""

    corpus: CorpusStore
    index: Bm25Index
    embeddings: EmbeddingTable
    gazetteer: dict[str, list[str]]
    lexicon: Lexicon
    stopwords: set[str]
    global_stats: bool = False

    @classmethod
    def from_store(cls, corpus, embeddings, gazetteer, lexicon, stopwords,
                   params: Bm25Params | None = None, global_stats: bool = False):
        index = bm25_mod.build_index(
            [(d.doc_id, d.content_tokens) for d in corpus.documents], params
        )
        return cls(corpus, index, embeddings, gazetteer, lexicon, stopwords, global_stats)

    def query(self, text: str, k: int = 3, mode: str = "hybrid"):
        return retrieve(
            text, k, self.corpus, self.index, self.embeddings, self.gazetteer,
            self.lexicon, self.stopwords, mode=mode, global_stats=self.global_stats,
        )

    def doc(self, doc_id: str) -> ProcessedDocument:
        return next(d for d in self.corpus.documents if d.doc_id == doc_id)
