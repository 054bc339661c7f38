"""Vicinity-driven sentence alignment with 1-N / N-1 expansion.

Unlike paragraphs, the first sentences are not assumed to align: the
search starts from the above-threshold cell closest to the virtual origin
``(0, 0)``.  When the best immediate neighbour is horizontal or vertical
the aligner grows the run one sentence at a time while the similarity of
the single sentence against the growing concatenation does not drop by
more than ``beta`` and still beats the competing adjacent row/column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import EmptyParagraph, OutOfBounds
from .paragraphs import (
    AlignmentGroup,
    AlignmentPath,
    Pair,
    as_matrix,
    best_candidate,
    group_alignments,
    immediate_vicinity,
    nearest_above,
)
from .similarity import TfIdfModel, concat_units, cosine, sentence_matrix
from .text import Paragraph

Span = tuple[int, int]
# similarity of a row span against a column span (inclusive, 1-based)
ConcatScorer = Callable[[Span, Span], float]


@dataclass(frozen=True)
class SentAlignConfig:
    alpha: float = 0.5
    beta: float = 0.05

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not self.beta >= 0.0:
            raise ValueError(f"beta must be non-negative, got {self.beta}")


def _span(v: Union[int, Span]) -> Span:
    return (v, v) if isinstance(v, int) else (int(v[0]), int(v[1]))


@dataclass(frozen=True)
class ConcatSimilarityQuery:
    """One sentence against a run of sentences; ints are single-sentence spans."""

    row: Span
    col: Span

    def __init__(self, row: Union[int, Span], col: Union[int, Span]):
        row, col = _span(row), _span(col)
        if row[0] > row[1] or col[0] > col[1]:
            raise ValueError(f"empty span in query {row}/{col}")
        if row[0] != row[1] and col[0] != col[1]:
            raise ValueError("at most one side of a concat query may span several sentences")
        object.__setattr__(self, "row", row)
        object.__setattr__(self, "col", col)


def concat_similarity(model: TfIdfModel, p1: Paragraph, p2: Paragraph, q: ConcatSimilarityQuery) -> float:
    """TF-IDF cosine between the query's row span of ``p1`` and column span of ``p2``."""
    if not (1 <= q.row[0] and q.row[1] <= len(p1) and 1 <= q.col[0] and q.col[1] <= len(p2)):
        raise OutOfBounds(f"query {q} outside {len(p1)}x{len(p2)} paragraphs")
    left = concat_units(p1.sentences[i - 1].tokens for i in range(q.row[0], q.row[1] + 1))
    right = concat_units(p2.sentences[j - 1].tokens for j in range(q.col[0], q.col[1] + 1))
    return cosine(model, left, right)


def align_sentence_matrix(m, cfg: SentAlignConfig, concat: ConcatScorer) -> AlignmentPath:
    """Run the sentence search over a precomputed matrix.

    ``concat(rows, cols)`` scores spans for the expansion loops; for
    single-cell spans it should agree with ``m``.
    """
    m = as_matrix(m)
    n, k = m.shape
    alpha, beta = cfg.alpha, cfg.beta

    def val(p: Pair) -> float:
        return m[p[0] - 1, p[1] - 1]

    start = nearest_above(m, (0, 0), alpha, start=(1, 1))
    if start is None:
        return AlignmentPath((), n, k, 0)
    cx, cy = start
    pairs = [start]
    iterations = 0
    while True:
        iterations += 1
        nxt = best_candidate(m, immediate_vicinity(cx, cy))
        if nxt is None or val(nxt) < alpha:
            nxt = nearest_above(m, (cx, cy), alpha)
            if nxt is None:
                break
            pairs.append(nxt)
            cx, cy = nxt
        elif nxt == (cx + 1, cy + 1):
            pairs.append(nxt)
            cx, cy = nxt
        elif nxt == (cx, cy + 1):
            nx, ny = nxt
            pairs.append(nxt)
            size = 1
            prev = concat((nx, nx), (ny, ny))
            while ny + size <= k:
                cur = concat((nx, nx), (ny, ny + size))
                rival = concat((nx + 1, nx + 1), (ny, ny + size)) if nx + 1 <= n else 0.0
                if not (cur > prev - beta and cur > rival):
                    break
                pairs.append((nx, ny + size))
                iterations += 1
                prev = cur
                size += 1
            cx, cy = nx, ny + size - 1
        else:
            nx, ny = nxt
            pairs.append(nxt)
            size = 1
            prev = concat((nx, nx), (ny, ny))
            while nx + size <= n:
                cur = concat((nx, nx + size), (ny, ny))
                rival = concat((nx, nx + size), (ny + 1, ny + 1)) if ny + 1 <= k else 0.0
                if not (cur > prev - beta and cur > rival):
                    break
                pairs.append((nx + size, ny))
                iterations += 1
                prev = cur
                size += 1
            cx, cy = nx + size - 1, ny
    return AlignmentPath(tuple(pairs), n, k, iterations)


def paragraph_scorer(model: TfIdfModel, p1: Paragraph, p2: Paragraph, m: np.ndarray) -> ConcatScorer:
    def score(rows: Span, cols: Span) -> float:
        if rows[0] == rows[1] and cols[0] == cols[1]:
            return float(m[rows[0] - 1, cols[0] - 1])
        return concat_similarity(model, p1, p2, ConcatSimilarityQuery(rows, cols))

    return score


def align_sentences(
    model: TfIdfModel, p1: Paragraph, p2: Paragraph, cfg: SentAlignConfig = SentAlignConfig()
) -> AlignmentPath:
    """Align the sentences of two (pseudo-)paragraphs."""
    if len(p1) == 0 or len(p2) == 0:
        raise EmptyParagraph("cannot align an empty paragraph")
    m = sentence_matrix(model, p1, p2)
    return align_sentence_matrix(m, cfg, paragraph_scorer(model, p1, p2, m))


def group_sentence_alignments(path: AlignmentPath) -> list[AlignmentGroup]:
    return group_alignments(path)
