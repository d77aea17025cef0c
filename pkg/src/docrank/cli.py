"""Command-line interface: ingest, serve, query, eval.

Aux resource paths (embeddings, lexicon, stopwords, gazetteer) and BM25
parameters can come from a JSON config file (--config or the
RETRIEVER_CONFIG environment variable); flags override config values.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from .bm25 import Bm25Params
from .embeddings import load_embeddings
from .errors import DocrankError
from .evalharness import compare_modes, evaluate, format_report, load_pairs
from .ranker import MODES, Retriever, load_gazetteer
from .textpipe import load_lexicon, load_stopwords
from . import ingest as ingest_mod

CONFIG_ENV = "RETRIEVER_CONFIG"
CONFIG_KEYS = (
    "port", "index", "embeddings", "lexicon", "stopwords", "gazetteer",
    "bm25.k1", "bm25.b", "bm25.global_stats",
)


def load_config(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    unknown = set(cfg) - set(CONFIG_KEYS)
    if unknown:
        raise DocrankError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return cfg


def _setting(args, cfg, key, default=None):
    flag = getattr(args, key.replace("bm25.", "bm25_"), None)
    if flag is not None:
        return flag
    return cfg.get(key, default)


def _resolve_config(args) -> dict:
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV)
    return load_config(path) if path else {}


def _load_resources(args, cfg):
    def need(key):
        value = _setting(args, cfg, key)
        if value is None:
            raise DocrankError(f"missing required setting {key!r} (flag or config)")
        return value

    lexicon = load_lexicon(need("lexicon"))
    stopwords = load_stopwords(need("stopwords"))
    embeddings = load_embeddings(need("embeddings"))
    gazetteer = load_gazetteer(need("gazetteer"))
    params = Bm25Params(
        k1=float(_setting(args, cfg, "bm25.k1", 1.5)),
        b=float(_setting(args, cfg, "bm25.b", 0.75)),
    )
    global_stats = bool(_setting(args, cfg, "bm25.global_stats", False))
    return lexicon, stopwords, embeddings, gazetteer, params, global_stats


def _build_retriever(args, cfg):
    lexicon, stopwords, embeddings, gazetteer, params, global_stats = _load_resources(args, cfg)
    index_path = _setting(args, cfg, "index")
    if index_path is None:
        raise DocrankError("missing required setting 'index' (flag or config)")
    corpus = ingest_mod.load_corpus(index_path)
    return Retriever.from_store(
        corpus, embeddings, gazetteer, lexicon, stopwords, params, global_stats
    )


def cmd_ingest(args) -> int:
    cfg = _resolve_config(args)
    lexicon, stopwords, embeddings, gazetteer, _, _ = _load_resources(args, cfg)
    manifest = ingest_mod.parse_manifest(args.manifest, set(gazetteer))
    store = ingest_mod.build_corpus(manifest, lexicon, stopwords, embeddings)
    ingest_mod.save_corpus(store, args.out)
    print(f"ingested {len(store.documents)} documents -> {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceState, create_app

    cfg = _resolve_config(args)
    lexicon, stopwords, embeddings, gazetteer, params, global_stats = _load_resources(args, cfg)
    state = ServiceState(embeddings, gazetteer, lexicon, stopwords, params, global_stats)
    index_path = _setting(args, cfg, "index")
    if index_path:
        corpus = ingest_mod.load_corpus(index_path)
        state.retriever = Retriever.from_store(
            corpus, embeddings, gazetteer, lexicon, stopwords, params, global_stats
        )
        state.version = corpus.version
    port = int(_setting(args, cfg, "port", 8000))
    uvicorn.run(create_app(state), host=args.host, port=port)
    return 0


def cmd_query(args) -> int:
    cfg = _resolve_config(args)
    retriever = _build_retriever(args, cfg)
    results, qrep = retriever.query(args.text, k=args.top_k, mode=args.mode)
    out = {
        "keywords": qrep.keywords,
        "detected_countries": sorted(qrep.detected_countries),
        "results": [dataclasses.asdict(r) | {"heading": retriever.doc(r.doc_id).heading}
                    for r in results],
    }
    print(json.dumps(out, ensure_ascii=False, indent=2))
    return 0


def cmd_eval(args) -> int:
    cfg = _resolve_config(args)
    retriever = _build_retriever(args, cfg)
    doc_ids = {d.doc_id for d in retriever.corpus.documents}
    pairs = load_pairs(args.pairs, doc_ids)
    if args.mode:
        rows = [evaluate(pairs, args.mode, retriever)]
    else:
        rows = compare_modes(pairs, retriever)
    if args.json:
        print(json.dumps([dataclasses.asdict(r) for r in rows], indent=2))
    else:
        print(format_report(rows))
    return 0


def _add_resource_flags(p):
    p.add_argument("--config")
    p.add_argument("--embeddings")
    p.add_argument("--lexicon")
    p.add_argument("--stopwords")
    p.add_argument("--gazetteer")
    p.add_argument("--bm25-k1", dest="bm25_k1", type=float)
    p.add_argument("--bm25-b", dest="bm25_b", type=float)
    p.add_argument("--bm25-global-stats", dest="bm25_global_stats",
                   action="store_const", const=True, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="docrank")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a corpus store from a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True)
    _add_resource_flags(p)
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("serve", help="run the HTTP query service")
    p.add_argument("--index")
    p.add_argument("--port", type=int)
    p.add_argument("--host", default="127.0.0.1")
    _add_resource_flags(p)
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("query", help="run one query against a corpus store")
    p.add_argument("text")
    p.add_argument("--index")
    p.add_argument("--mode", choices=MODES, default="hybrid")
    p.add_argument("--top-k", dest="top_k", type=int, default=3)
    _add_resource_flags(p)
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("eval", help="accuracy/latency report over a pairs file")
    p.add_argument("--index")
    p.add_argument("--pairs", required=True)
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--json", action="store_true")
    _add_resource_flags(p)
    p.set_defaults(fn=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DocrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
