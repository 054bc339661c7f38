"""Vicinity-driven paragraph alignment.

The search walks a cursor through the paragraph similarity matrix.  From
each aligned cell it looks first at the immediate neighbours (1-1, 1-N and
N-1 continuations), then at single-paragraph skips, and finally at the
nearest cell above threshold anywhere in the remaining rectangle (a
long-distance skip).  Coordinates in paths and groups are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import EmptyMatrix, NonContiguousComponent, OutOfBounds
from .text import Document, Paragraph, Sentence

Pair = tuple[int, int]


@dataclass(frozen=True)
class AlignmentPath:
    """Aligned cells in the order they were marked.

    ``iterations`` counts search steps and is excluded from equality.
    """

    pairs: tuple[Pair, ...]
    n_rows: int
    n_cols: int
    iterations: int = field(default=0, compare=False)

    def __post_init__(self):
        for x, y in self.pairs:
            if not (1 <= x <= self.n_rows and 1 <= y <= self.n_cols):
                raise OutOfBounds(f"pair {(x, y)} outside {self.n_rows}x{self.n_cols}")

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def as_set(self) -> frozenset[Pair]:
        return frozenset(self.pairs)

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.n_rows, self.n_cols), dtype=int)
        for x, y in self.pairs:
            a[x - 1, y - 1] = 1
        return a

    def is_monotone(self) -> bool:
        for (x0, y0), (x1, y1) in zip(self.pairs, self.pairs[1:]):
            if x1 < x0 or y1 < y0 or x1 + y1 <= x0 + y0:
                return False
        return True


@dataclass(frozen=True)
class AlignmentGroup:
    """Inclusive 1-based ranges of source and target units aligned together."""

    src: tuple[int, int]
    tgt: tuple[int, int]

    def __post_init__(self):
        if self.src[0] < 1 or self.tgt[0] < 1 or self.src[1] < self.src[0] or self.tgt[1] < self.tgt[0]:
            raise ValueError(f"invalid group ranges {self.src} / {self.tgt}")

    @property
    def src_indices(self) -> range:
        return range(self.src[0], self.src[1] + 1)

    @property
    def tgt_indices(self) -> range:
        return range(self.tgt[0], self.tgt[1] + 1)

    @property
    def kind(self) -> str:
        n, m = len(self.src_indices), len(self.tgt_indices)
        return f"{'1' if n == 1 else 'N'}-{'1' if m == 1 else 'N'}"

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.src_indices), len(self.tgt_indices)


@dataclass(frozen=True)
class ParaAlignConfig:
    alpha: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")


# -- shared search primitives (also used by the sentence aligner) ---------


def as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or 0 in m.shape:
        raise EmptyMatrix(f"similarity matrix must be non-empty 2-D, got shape {m.shape}")
    return m


def best_candidate(m: np.ndarray, candidates: Sequence[Pair]) -> Pair | None:
    """Highest-scoring in-bounds candidate; earlier candidates win ties."""
    n, k = m.shape
    best = None
    best_val = -np.inf
    for x, y in candidates:
        if 1 <= x <= n and 1 <= y <= k and m[x - 1, y - 1] > best_val:
            best, best_val = (x, y), m[x - 1, y - 1]
    return best


def immediate_vicinity(cx: int, cy: int) -> list[Pair]:
    # diagonal first: ties favour 1-1
    return [(cx + 1, cy + 1), (cx, cy + 1), (cx + 1, cy)]


def nearest_above(m: np.ndarray, origin: Pair, alpha: float, start: Pair | None = None) -> Pair | None:
    """Nearest cell (euclidean, from ``origin``) with ``x >= start_x``,
    ``y >= start_y`` and value >= ``alpha``; ``origin`` itself is excluded.

    Ties on distance go to the higher value, then smaller x, then smaller y.
    ``start`` defaults to ``origin``.
    """
    ox, oy = origin
    sx, sy = start if start is not None else origin
    sx, sy = max(sx, 1), max(sy, 1)
    sub = m[sx - 1:, sy - 1:]
    xs, ys = np.nonzero(sub >= alpha)
    if xs.size == 0:
        return None
    vals = sub[xs, ys]
    xs = xs + sx
    ys = ys + sy
    keep = ~((xs == ox) & (ys == oy))
    if not keep.any():
        return None
    xs, ys, vals = xs[keep], ys[keep], vals[keep]
    dist2 = (xs - ox) ** 2 + (ys - oy) ** 2
    i = np.lexsort((ys, xs, -vals, dist2))[0]
    return int(xs[i]), int(ys[i])


# -- paragraph alignment ---------------------------------------------------


def align_paragraphs(m, cfg: ParaAlignConfig = ParaAlignConfig()) -> AlignmentPath:
    """Align the paragraphs of two documents given their similarity matrix.

    The first paragraphs (titles) are aligned unconditionally; the search
    stops when no cell above ``cfg.alpha`` remains ahead of the cursor.
    """
    m = as_matrix(m)
    n, k = m.shape
    alpha = cfg.alpha
    cx, cy = 1, 1
    pairs = [(cx, cy)]
    iterations = 0
    while True:
        iterations += 1
        nxt = best_candidate(m, immediate_vicinity(cx, cy))
        if nxt is None or m[nxt[0] - 1, nxt[1] - 1] < alpha:
            nxt = best_candidate(m, [(cx + 2, cy + 1), (cx + 1, cy + 2)])
            if nxt is None or m[nxt[0] - 1, nxt[1] - 1] < alpha:
                nxt = nearest_above(m, (cx, cy), alpha)
        if nxt is None:
            break
        cx, cy = nxt
        pairs.append(nxt)
    return AlignmentPath(tuple(pairs), n, k, iterations)


def group_alignments(path: AlignmentPath | Sequence[Pair], strict: bool = False) -> list[AlignmentGroup]:
    """Merge pairs sharing a row or column into groups (connected components).

    A long-distance jump along a single row or column leaves a gap inside a
    component, e.g. ``(4, 5), (6, 5)``.  By default the group then covers the
    hull ``src=(4, 6)`` so the skipped unit is handed to the next stage
    alongside its neighbours; ``strict=True`` raises
    :class:`NonContiguousComponent` instead.
    """
    pairs = sorted(set(path))
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_row: dict[int, int] = {}
    by_col: dict[int, int] = {}
    for i, (x, y) in enumerate(pairs):
        for index, key in ((by_row, x), (by_col, y)):
            if key in index:
                parent[find(i)] = find(index[key])
            else:
                index[key] = i

    components: dict[int, list[Pair]] = {}
    for i, p in enumerate(pairs):
        components.setdefault(find(i), []).append(p)

    groups = []
    for members in components.values():
        rows = {x for x, _ in members}
        cols = {y for _, y in members}
        gapped = len(rows) != max(rows) - min(rows) + 1 or len(cols) != max(cols) - min(cols) + 1
        if gapped and strict:
            raise NonContiguousComponent(f"component {sorted(members)} is not contiguous")
        groups.append(AlignmentGroup((min(rows), max(rows)), (min(cols), max(cols))))
    groups.sort(key=lambda g: (g.src[0], g.tgt[0]))
    return groups


def _merge_paragraphs(doc: Document, span: tuple[int, int]) -> Paragraph:
    if span[0] == span[1]:
        return doc.paragraph(span[0])
    sents = [s for i in range(span[0], span[1] + 1) for s in doc.paragraph(i).sentences]
    return Paragraph(span[0], tuple(Sentence(j, s.text, s.tokens) for j, s in enumerate(sents, 1)))


def concatenate_group(d1: Document, d2: Document, group: AlignmentGroup) -> tuple[Paragraph, Paragraph]:
    """Pseudo-paragraphs holding every sentence of the group's paragraphs, in order."""
    if group.src[1] > len(d1) or group.tgt[1] > len(d2):
        raise OutOfBounds(f"group {group} exceeds documents of {len(d1)} / {len(d2)} paragraphs")
    return _merge_paragraphs(d1, group.src), _merge_paragraphs(d2, group.tgt)
