"""Two-stage document alignment: paragraphs first, then sentences inside each paragraph group."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

import numpy as np

from .errors import OutOfBounds
from .paragraphs import (
    AlignmentGroup,
    AlignmentPath,
    ParaAlignConfig,
    align_paragraphs,
    concatenate_group,
    group_alignments,
)
from .sentences import SentAlignConfig, align_sentence_matrix, paragraph_scorer
from .similarity import fit_pair_model, paragraph_matrix, sentence_matrix
from .text import Document

GlobalSentence = tuple[int, int]  # (paragraph, sentence), both 1-based
GlobalPair = tuple[GlobalSentence, GlobalSentence]


@dataclass(frozen=True)
class SentencePair:
    src_par: int
    src_sent: int
    tgt_par: int
    tgt_sent: int
    score: float

    @property
    def key(self) -> GlobalPair:
        return (self.src_par, self.src_sent), (self.tgt_par, self.tgt_sent)


@dataclass(frozen=True)
class GroupResult:
    group: AlignmentGroup
    local_path: AlignmentPath
    pairs: tuple[SentencePair, ...]
    matrix: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class PipelineResult:
    paragraph_path: AlignmentPath
    groups: tuple[GroupResult, ...]
    para_cfg: ParaAlignConfig
    sent_cfg: SentAlignConfig
    paragraph_matrix: np.ndarray = field(repr=False, compare=False)

    @property
    def paragraph_groups(self) -> list[AlignmentGroup]:
        return [g.group for g in self.groups]

    @property
    def sentence_pairs(self) -> list[SentencePair]:
        return [p for g in self.groups for p in g.pairs]

    def pair_set(self) -> set[GlobalPair]:
        return {p.key for p in self.sentence_pairs}


def _unflatten(start_par: int, sizes: Sequence[int], local: int) -> GlobalSentence:
    ends = list(accumulate(sizes))
    if not 1 <= local <= (ends[-1] if ends else 0):
        raise OutOfBounds(f"local sentence {local} outside group of {sum(sizes)} sentences")
    k = bisect_right(ends, local - 1)
    before = ends[k - 1] if k else 0
    return start_par + k, local - before


def local_to_global(
    group: AlignmentGroup, src_sizes: Sequence[int], tgt_sizes: Sequence[int], local: tuple[int, int]
) -> GlobalPair:
    """Map a pair of indices into concatenated pseudo-paragraphs back to
    (paragraph, sentence) coordinates.  ``*_sizes`` are the sentence counts
    of the group's paragraphs, in order."""
    return _unflatten(group.src[0], src_sizes, local[0]), _unflatten(group.tgt[0], tgt_sizes, local[1])


def global_to_local(group: AlignmentGroup, sizes: Sequence[int], sentence: GlobalSentence, side: str = "src") -> int:
    span = group.src if side == "src" else group.tgt
    par, sent = sentence
    if not span[0] <= par <= span[1] or not 1 <= sent <= sizes[par - span[0]]:
        raise OutOfBounds(f"{sentence} not in group span {span}")
    return sum(sizes[: par - span[0]]) + sent


def align_documents(
    d1: Document,
    d2: Document,
    para_cfg: ParaAlignConfig = ParaAlignConfig(),
    sent_cfg: SentAlignConfig = SentAlignConfig(),
) -> PipelineResult:
    model = fit_pair_model(d1, d2)
    pm = paragraph_matrix(model, d1, d2)
    ppath = align_paragraphs(pm, para_cfg)
    results = []
    for group in group_alignments(ppath):
        p1, p2 = concatenate_group(d1, d2, group)
        sm = sentence_matrix(model, p1, p2)
        spath = align_sentence_matrix(sm, sent_cfg, paragraph_scorer(model, p1, p2, sm))
        src_sizes = [len(d1.paragraph(i)) for i in group.src_indices]
        tgt_sizes = [len(d2.paragraph(j)) for j in group.tgt_indices]
        pairs = []
        for i, j in spath:
            (sp, ss), (tp, ts) = local_to_global(group, src_sizes, tgt_sizes, (i, j))
            pairs.append(SentencePair(sp, ss, tp, ts, float(sm[i - 1, j - 1])))
        results.append(GroupResult(group, spath, tuple(pairs), sm))
    return PipelineResult(ppath, tuple(results), para_cfg, sent_cfg, pm)
