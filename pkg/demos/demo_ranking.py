"""
Hybrid ranking on the bundled 12-document corpus
================================================

Builds the fixture corpus from its manifest, then answers one query three
ways: BM25 over content tokens, cosine similarity over heading embeddings,
and the Borda-count fusion of both. The per-mode ranks printed for the fused
results show where each signal placed the document before fusion.
"""

import os
from pathlib import Path

os.chdir(Path(__file__).resolve().parents[1])

from docrank import (Retriever, build_corpus, load_embeddings, load_gazetteer,
                     load_lexicon, load_stopwords, parse_manifest)

FIX = Path("tests/fixtures/thai")
lexicon = load_lexicon(FIX / "lexicon.tsv")
stopwords = load_stopwords(FIX / "stopwords.txt")
embeddings = load_embeddings(FIX / "embeddings.txt")
gazetteer = load_gazetteer(FIX / "gazetteer.json")

manifest = parse_manifest(FIX / "manifest.json", set(gazetteer))
corpus = build_corpus(manifest, lexicon, stopwords, embeddings)
retriever = Retriever.from_store(corpus, embeddings, gazetteer, lexicon, stopwords)
print(f"corpus: {len(corpus.documents)} documents\n")

query = "ขอข้อมูลเกี่ยวกับการนำเข้าสินค้าในเมียนมาร์หน่อยค่ะ"
print("query:", query)

for mode in ("bm25", "embedding", "hybrid"):
    results, qrep = retriever.query(query, k=3, mode=mode)
    print(f"\n--- {mode} (countries detected: {sorted(qrep.detected_countries)})")
    for r in results:
        doc = retriever.doc(r.doc_id)
        print(f"  {r.final_rank}. {doc.heading}")
        if mode == "hybrid":
            print(f"     heading rank {r.heading_rank}, content rank {r.content_rank},"
                  f" borda points {r.borda_points}")
