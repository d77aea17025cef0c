"""docrank: hybrid document retrieval fusing BM25 content ranking with
embedding-based heading ranking via Borda count."""

from .bm25 import Bm25Index, Bm25Params, bm25_rank, bm25_score, build_index
from .embeddings import EmbeddingTable, PooledVector, cosine, embed_keywords, load_embeddings
from .evalharness import (
    EvalPair,
    EvalRow,
    compare_modes,
    evaluate,
    format_report,
    load_pairs,
)
from .ingest import (
    CorpusManifest,
    CorpusStore,
    ProcessedDocument,
    RawSection,
    SourceEntry,
    build_corpus,
    load_corpus,
    parse_manifest,
    process_section,
    save_corpus,
    segment_document,
)
from .ranker import (
    HybridResult,
    QueryRepresentation,
    Retriever,
    borda_aggregate,
    content_rank,
    filter_candidates,
    heading_rank,
    load_gazetteer,
    process_query,
    retrieve,
)
from .textpipe import (
    KEYWORD_TAGS,
    Lexicon,
    PosTag,
    TaggedToken,
    correct_spelling,
    extract_keywords,
    load_lexicon,
    load_stopwords,
    normalize,
    pos_tag,
    remove_stopwords,
    tokenize,
)

__version__ = "0.1.0"
