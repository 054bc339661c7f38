"""Jaccard-threshold baseline and precision/recall scoring against gold alignments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .pipeline import GlobalPair, SentencePair
from .similarity import jaccard
from .text import Document


@dataclass(frozen=True)
class GoldAlignment:
    pairs: frozenset[GlobalPair]

    def __init__(self, pairs: Iterable[GlobalPair] = ()):
        object.__setattr__(self, "pairs", frozenset(pairs))

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def check_bounds(self, d1: Document, d2: Document) -> bool:
        def ok(doc, par, sent):
            return 1 <= par <= len(doc) and 1 <= sent <= len(doc.paragraph(par))

        return all(ok(d1, *s) and ok(d2, *t) for s, t in self.pairs)


@dataclass(frozen=True)
class EvalReport:
    precision: float
    recall: float
    f1: float
    true_positives: int
    false_positives: int
    false_negatives: int

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "EvalReport":
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        return cls(p, r, f, tp, fp, fn)

    def __add__(self, other: "EvalReport") -> "EvalReport":
        """Micro-average by summing counts."""
        return EvalReport.from_counts(
            self.true_positives + other.true_positives,
            self.false_positives + other.false_positives,
            self.false_negatives + other.false_negatives,
        )


def evaluate(predicted: Iterable[GlobalPair], gold: Union[GoldAlignment, Iterable[GlobalPair]]) -> EvalReport:
    pred = set(predicted)
    ref = set(gold.pairs if isinstance(gold, GoldAlignment) else gold)
    tp = len(pred & ref)
    return EvalReport.from_counts(tp, len(pred - ref), len(ref - pred))


def jaccard_pairs(d1: Document, d2: Document, threshold: float = 0.5) -> list[SentencePair]:
    """Every cross-document sentence pair whose token-set Jaccard exceeds ``threshold``.

    No paragraph step and no ordering constraint.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    src = [(p.index, s.index, frozenset(s.tokens)) for p in d1.paragraphs for s in p.sentences]
    tgt = [(p.index, s.index, frozenset(s.tokens)) for p in d2.paragraphs for s in p.sentences]
    out = []
    for sp, ss, a in src:
        for tp, ts, b in tgt:
            score = jaccard(a, b)
            if score > threshold:
                out.append(SentencePair(sp, ss, tp, ts, score))
    return out


def jaccard_align(d1: Document, d2: Document, threshold: float = 0.5) -> set[GlobalPair]:
    return {p.key for p in jaccard_pairs(d1, d2, threshold)}
