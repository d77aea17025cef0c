"""Evaluation harness: accuracy@1/@3 and mean ranking latency per mode over a
TSV file of (query, relevant doc id) pairs."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import EmptyEvalError, EmptyQueryError, ParseError, UnknownDocError
from .ranker import MODES, Retriever


@dataclass(frozen=True)
class EvalPair:
    query: str
    relevant_doc_id: str


@dataclass
class EvalRow:
    mode: str
    accuracy_at_1: float
    accuracy_at_3: float
    mean_latency_s: float
    n_queries: int
    n_empty: int  # queries that produced no keywords; counted as misses


def load_pairs(path, corpus_doc_ids: set[str]) -> list[EvalPair]:
    """One pair per line: query<TAB>doc_id. Blank lines and '#' comments are
    skipped. Every doc_id must exist in the corpus under evaluation."""
    pairs: list[EvalPair] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            if "\t" not in line:
                raise ParseError("expected query<TAB>doc_id", lineno)
            query, doc_id = line.split("\t", 1)
            pairs.append(EvalPair(query=query, relevant_doc_id=doc_id))
    missing = sorted({p.relevant_doc_id for p in pairs} - corpus_doc_ids)
    if missing:
        raise UnknownDocError(f"doc ids not in corpus: {', '.join(missing)}")
    return pairs


def evaluate(pairs: list[EvalPair], mode: str, retriever: Retriever) -> EvalRow:
    if not pairs:
        raise EmptyEvalError("no evaluation pairs")
    hits1 = hits3 = empty = 0
    total_s = 0.0
    for pair in pairs:
        t0 = time.perf_counter()
        try:
            results, _ = retriever.query(pair.query, k=3, mode=mode)
        except EmptyQueryError:
            empty += 1
            total_s += time.perf_counter() - t0
            continue
        total_s += time.perf_counter() - t0
        top_ids = [r.doc_id for r in results]
        if top_ids and top_ids[0] == pair.relevant_doc_id:
            hits1 += 1
        if pair.relevant_doc_id in top_ids:
            hits3 += 1
    n = len(pairs)
    return EvalRow(
        mode=mode,
        accuracy_at_1=hits1 / n,
        accuracy_at_3=hits3 / n,
        mean_latency_s=total_s / n,
        n_queries=n,
        n_empty=empty,
    )


def compare_modes(pairs: list[EvalPair], retriever: Retriever) -> list[EvalRow]:
    """Run all three modes over the identical pair list."""
    return [evaluate(pairs, mode, retriever) for mode in MODES]


def format_report(rows: list[EvalRow]) -> str:
    lines = [
        f"{'Approach':<12} {'Acc@1 (%)':>10} {'Acc@3 (%)':>10} {'Mean time (s)':>14} {'Queries':>8}",
        "-" * 58,
    ]
    for r in rows:
        lines.append(
            f"{r.mode:<12} {r.accuracy_at_1 * 100:>10.2f} {r.accuracy_at_3 * 100:>10.2f}"
            f" {r.mean_latency_s:>14.4f} {r.n_queries:>8}"
        )
        if r.n_empty:
            lines.append(f"  ({r.n_empty} queries produced no keywords; counted as misses)")
    return "\n".join(lines)
