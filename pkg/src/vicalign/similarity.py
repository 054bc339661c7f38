"""TF-IDF cosine and Jaccard similarity, plus the similarity matrices fed to the aligners.

A text unit is any sequence of tokens: a sentence's tokens or the
concatenation of several sentences' tokens.  Matrices are plain 2-D numpy
arrays, stored 0-based; the aligners translate to 1-based coordinates.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import EmptyCorpus
from .text import Document, Paragraph

TextUnit = Sequence[str]


def concat_units(units: Iterable[TextUnit]) -> tuple[str, ...]:
    return tuple(chain.from_iterable(units))


@dataclass(frozen=True, eq=False)
class TfIdfModel:
    vocabulary: dict[str, int]
    idf: np.ndarray
    n_docs: int

    def weight(self, token: str) -> float:
        return float(self.idf[self.vocabulary[token]])

    def vector(self, unit: TextUnit) -> np.ndarray:
        """Raw-count TF times IDF; out-of-vocabulary tokens are ignored."""
        vec = np.zeros(len(self.vocabulary))
        for tok, count in Counter(unit).items():
            idx = self.vocabulary.get(tok)
            if idx is not None:
                vec[idx] = count * self.idf[idx]
        return vec

    def unit_vectors(self, units: Iterable[TextUnit]) -> np.ndarray:
        """L2-normalized row vectors; all-zero rows stay zero."""
        rows = [self.vector(u) for u in units]
        mat = np.vstack(rows) if rows else np.zeros((0, len(self.vocabulary)))
        norms = np.linalg.norm(mat, axis=1, keepdims=True)
        np.divide(mat, norms, out=mat, where=norms > 0)
        return mat


def fit_tfidf(units: Iterable[TextUnit]) -> TfIdfModel:
    """Fit smoothed IDF weights ``ln((n+1)/(df+1)) + 1`` over ``units``."""
    df: Counter[str] = Counter()
    n = 0
    for unit in units:
        df.update(set(unit))
        n += 1
    if n == 0:
        raise EmptyCorpus("cannot fit TF-IDF on an empty collection")
    vocab = {tok: i for i, tok in enumerate(sorted(df))}
    idf = np.array([math.log((n + 1) / (df[tok] + 1)) + 1.0 for tok in vocab])
    return TfIdfModel(vocab, idf, n)


def fit_pair_model(d1: Document, d2: Document) -> TfIdfModel:
    """One model per document pair, fitted on every sentence of both."""
    return fit_tfidf(s.tokens for s in chain(d1.sentences(), d2.sentences()))


def _cos_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.clip(a @ b.T, 0.0, 1.0)


def cosine(model: TfIdfModel, u: TextUnit, v: TextUnit) -> float:
    vecs = model.unit_vectors([u, v])
    return float(np.clip(vecs[0] @ vecs[1], 0.0, 1.0))


def jaccard(u: Iterable[str], v: Iterable[str]) -> float:
    a, b = set(u), set(v)
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def unit_matrix(model: TfIdfModel, rows: Sequence[TextUnit], cols: Sequence[TextUnit]) -> np.ndarray:
    return _cos_rows(model.unit_vectors(rows), model.unit_vectors(cols))


def sentence_matrix(model: TfIdfModel, p1: Paragraph, p2: Paragraph) -> np.ndarray:
    """``M[i, j]`` = cosine of sentence i+1 of ``p1`` and sentence j+1 of ``p2``."""
    return unit_matrix(model, [s.tokens for s in p1.sentences], [s.tokens for s in p2.sentences])


def paragraph_matrix(model: TfIdfModel, d1: Document, d2: Document) -> np.ndarray:
    """Paragraph similarity = best cosine over all cross sentence pairs."""
    full = unit_matrix(model, [s.tokens for s in d1.sentences()], [s.tokens for s in d2.sentences()])
    row_starts = np.cumsum([0] + d1.sizes[:-1])
    col_starts = np.cumsum([0] + d2.sizes[:-1])
    by_row = np.maximum.reduceat(full, row_starts, axis=0)
    return np.maximum.reduceat(by_row, col_starts, axis=1)


def write_matrix_tsv(matrix: np.ndarray, fh: TextIO) -> None:
    """Debug dump: one ``row<TAB>col<TAB>value`` line per cell, 1-based."""
    n_rows, n_cols = matrix.shape
    for i in range(n_rows):
        for j in range(n_cols):
            fh.write(f"{i + 1}\t{j + 1}\t{matrix[i, j]:.6f}\n")
