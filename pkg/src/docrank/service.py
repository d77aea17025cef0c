"""HTTP query service: POST /v1/query, GET /v1/health, POST /v1/reindex.

The live (CorpusStore, Bm25Index) pair lives inside a single Retriever
reference that is swapped atomically on reindex, so in-flight queries always
see one consistent corpus version. One reindex may run at a time.
"""

from __future__ import annotations

import threading
import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .bm25 import Bm25Params
from .errors import DocrankError, EmptyQueryError
from .ingest import build_corpus, parse_manifest
from .ranker import MODES, Retriever

MAX_TOP_K = 50
DEFAULT_TOP_K = 3


class ServiceState:
    """Shared immutable resources plus the swappable retriever."""

    def __init__(self, embeddings, gazetteer, lexicon, stopwords,
                 params: Bm25Params | None = None, global_stats: bool = False,
                 retriever: Retriever | None = None, version: int = 0):
        self.embeddings = embeddings
        self.gazetteer = gazetteer
        self.lexicon = lexicon
        self.stopwords = stopwords
        self.params = params or Bm25Params()
        self.global_stats = global_stats
        self.retriever = retriever
        self.version = version
        self.reindex_lock = threading.Lock()

    def reindex(self, manifest_path) -> dict:
        manifest = parse_manifest(manifest_path, set(self.gazetteer))
        corpus = build_corpus(
            manifest, self.lexicon, self.stopwords, self.embeddings,
            version=self.version + 1,
        )
        new_retriever = Retriever.from_store(
            corpus, self.embeddings, self.gazetteer, self.lexicon,
            self.stopwords, self.params, self.global_stats,
        )
        # single-reference swap: queries read self.retriever exactly once
        self.retriever = new_retriever
        self.version = corpus.version
        return {"documents": len(corpus.documents), "version": corpus.version}


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "message": message})


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="docrank", docs_url=None, redoc_url=None)
    app.state.docrank = state

    @app.post("/v1/query")
    async def query(request: Request):
        t0 = time.perf_counter()
        try:
            body = await request.json()
        except Exception:
            return _error(400, "bad_request", "request body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "bad_request", "request body must be a JSON object")
        text = body.get("text", "")
        if not isinstance(text, str) or not text.strip():
            return _error(400, "empty_query", "query text is empty")
        top_k = body.get("top_k", DEFAULT_TOP_K)
        if not isinstance(top_k, int) or isinstance(top_k, bool) or not 1 <= top_k <= MAX_TOP_K:
            return _error(400, "bad_top_k", f"top_k must be an integer in [1, {MAX_TOP_K}]")
        mode = body.get("mode", "hybrid")
        if mode not in MODES:
            return _error(400, "bad_mode", f"mode must be one of {', '.join(MODES)}")
        retriever = state.retriever
        if retriever is None:
            return _error(503, "no_index", "no corpus loaded")
        try:
            results, qrep = retriever.query(text, k=top_k, mode=mode)
        except EmptyQueryError:
            return _error(400, "empty_query", "query has no keywords after processing")
        except DocrankError as exc:
            return _error(422, "query_failed", str(exc))
        payload = {
            "results": [
                {
                    "doc_id": r.doc_id,
                    "heading": (d := retriever.doc(r.doc_id)).heading,
                    "country": d.country,
                    "snippet": d.snippet,
                    "uri": d.uri,
                    "heading_rank": r.heading_rank,
                    "content_rank": r.content_rank,
                    "borda_points": r.borda_points,
                    "final_rank": r.final_rank,
                }
                for r in results
            ],
            "latency_ms": (time.perf_counter() - t0) * 1000.0,
            "detected_countries": sorted(qrep.detected_countries),
        }
        return JSONResponse(content=payload)

    @app.get("/v1/health")
    async def health():
        retriever = state.retriever
        return {
            "status": "ok",
            "documents": len(retriever.corpus.documents) if retriever else 0,
            "version": state.version,
            "embedding_dim": state.embeddings.dim,
        }

    @app.post("/v1/reindex")
    async def reindex(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "bad_request", "request body must be JSON")
        manifest_path = body.get("manifest") if isinstance(body, dict) else None
        if not isinstance(manifest_path, str) or not manifest_path:
            return _error(400, "bad_request", "body must carry a manifest path")
        if not state.reindex_lock.acquire(blocking=False):
            return _error(409, "reindex_in_progress", "another reindex is running")
        try:
            report = state.reindex(manifest_path)
        except DocrankError as exc:
            return _error(422, "ingest_failed", str(exc))
        finally:
            state.reindex_lock.release()
        return JSONResponse(content=report)

    return app
