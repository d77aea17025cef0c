"""Word-vector table loading, mean-pooled keyword embeddings, cosine."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DuplicateWordError, FormatError


@dataclass
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray]


@dataclass(frozen=True)
class PooledVector:
    values: np.ndarray
    is_zero: bool  # true iff no keyword was in vocabulary


def load_embeddings(path) -> EmbeddingTable:
    """Load a plain-text word2vec file: header "V D", then V lines of
    "word v1 ... vD"."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise FormatError("header must be two integers: vocab size and dimension")
        try:
            n_words, dim = int(header[0]), int(header[1])
        except ValueError:
            raise FormatError("non-integer header") from None
        if dim <= 0:
            raise FormatError("dimension must be positive")
        vectors: dict[str, np.ndarray] = {}
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(" ")
            if len(parts) != dim + 1:
                raise FormatError(f"line {lineno}: expected word and {dim} components")
            word = parts[0]
            if word in vectors:
                raise DuplicateWordError(f"line {lineno}: duplicate word {word!r}")
            try:
                vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
            except ValueError:
                raise FormatError(f"line {lineno}: non-numeric component") from None
            vectors[word] = vec
    if len(vectors) != n_words:
        raise FormatError(f"header declares {n_words} words, file has {len(vectors)}")
    return EmbeddingTable(dim=dim, vectors=vectors)


def embed_keywords(keywords: list[str], table: EmbeddingTable) -> PooledVector:
    """Arithmetic mean of the in-vocabulary keyword vectors, counting
    multiplicity; out-of-vocabulary keywords are skipped. No in-vocabulary
    keyword at all yields the zero vector with is_zero set."""
    hits = [table.vectors[w] for w in keywords if w in table.vectors]
    if not hits:
        return PooledVector(np.zeros(table.dim, dtype=np.float64), is_zero=True)
    return PooledVector(np.mean(hits, axis=0), is_zero=False)


def cosine(u, v) -> float:
    """Cosine similarity; defined as 0.0 when either vector has zero norm."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))
