"""Synthetic comparable document pairs with known sentence correspondences.

A source article is sampled from a closed pseudo-word pool with Zipf-like
frequencies; the target is derived from it by an edit script (paragraph
and sentence drops, sentence splits and merges, verbatim quotes, token
replacement) whose correspondences form the gold alignment.  The script
never reorders content, so gold alignments are monotone.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, fields
from itertools import accumulate, product
from pathlib import Path
from typing import Any, Union

from .errors import InvalidSpec
from .evaluation import GoldAlignment
from .text import Document

_CONSONANTS = "bdfgklmnprstvz"
_VOWELS = "aeiou"
_SYLLABLES = [c + v for c, v in product(_CONSONANTS, _VOWELS)]


@dataclass(frozen=True)
class SynthSpec:
    """Generation parameters.  ``paragraphs`` counts body paragraphs; every
    document also starts with a one-line title that is copied verbatim."""

    paragraphs: int = 6
    min_sentences: int = 2
    max_sentences: int = 5
    min_tokens: int = 8
    max_tokens: int = 16
    vocab_size: int = 3000
    zipf_exponent: float = 1.0
    drop_paragraph_rate: float = 0.0
    drop_sentence_rate: float = 0.0
    split_rate: float = 0.0
    merge_rate: float = 0.0
    quote_rate: float = 0.0
    replacement_rate: float = 0.0
    drop_paragraphs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "drop_paragraphs", tuple(int(p) for p in self.drop_paragraphs))
        problems = []
        if self.paragraphs < 1:
            problems.append("paragraphs must be >= 1")
        if not 1 <= self.min_sentences <= self.max_sentences:
            problems.append("need 1 <= min_sentences <= max_sentences")
        if not 1 <= self.min_tokens <= self.max_tokens:
            problems.append("need 1 <= min_tokens <= max_tokens")
        if self.vocab_size < 2:
            problems.append("vocab_size must be >= 2")
        if self.zipf_exponent < 0:
            problems.append("zipf_exponent must be >= 0")
        rates = ("drop_paragraph_rate", "drop_sentence_rate", "split_rate", "merge_rate", "quote_rate", "replacement_rate")
        for name in rates:
            if not 0.0 <= getattr(self, name) <= 1.0:
                problems.append(f"{name} must lie in [0, 1]")
        if self.drop_sentence_rate + self.split_rate + self.merge_rate > 1.0:
            problems.append("drop_sentence_rate + split_rate + merge_rate must not exceed 1")
        for p in self.drop_paragraphs:
            if not 2 <= p <= self.paragraphs + 1:
                problems.append(f"drop_paragraphs entry {p} must be a body paragraph (2..{self.paragraphs + 1})")
        if problems:
            raise InvalidSpec("; ".join(problems))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SynthSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InvalidSpec(f"unknown synthesis parameters: {sorted(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise InvalidSpec(str(exc)) from exc

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "SynthSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["drop_paragraphs"] = list(self.drop_paragraphs)
        return d


def word_pool(size: int) -> list[str]:
    """``size`` distinct lowercase pseudo-words of two or more syllables."""
    base = len(_SYLLABLES)
    words = []
    for i in range(base, base + size):
        parts = []
        while i:
            i, r = divmod(i, base)
            parts.append(_SYLLABLES[r])
        words.append("".join(reversed(parts)))
    return words


def _render(tokens: list[str]) -> str:
    text = " ".join(tokens)
    return text[:1].upper() + text[1:] + "."


class _Sampler:
    def __init__(self, rng: random.Random, spec: SynthSpec):
        self.rng = rng
        self.pool = word_pool(spec.vocab_size)
        self.cum = list(accumulate(1.0 / (r ** spec.zipf_exponent) for r in range(1, spec.vocab_size + 1)))
        self.spec = spec

    def tokens(self, n: int) -> list[str]:
        return self.rng.choices(self.pool, cum_weights=self.cum, k=n)

    def sentence(self) -> list[str]:
        return self.tokens(self.rng.randint(self.spec.min_tokens, self.spec.max_tokens))

    def perturb(self, toks: list[str]) -> list[str]:
        rate = self.spec.replacement_rate
        out = []
        for tok in toks:
            if self.rng.random() < rate:
                tok = self.tokens(1)[0]
            out.append(tok)
        return out


def synthesize_pair(seed: int, spec: SynthSpec = SynthSpec()) -> tuple[Document, Document, GoldAlignment]:
    """Generate ``(source, target, gold)`` deterministically from ``seed``."""
    rng = random.Random(seed)
    sampler = _Sampler(rng, spec)

    title = sampler.tokens(rng.randint(3, 6))
    # each source sentence: (tokens, is_quote)
    body: list[list[tuple[list[str], bool]]] = []
    for _ in range(spec.paragraphs):
        sents = [(sampler.sentence(), False) for _ in range(rng.randint(spec.min_sentences, spec.max_sentences))]
        if rng.random() < spec.quote_rate:
            quote = sampler.tokens(spec.max_tokens + 4)
            sents.insert(rng.randint(0, len(sents)), (quote, True))
        body.append(sents)

    src_paras = [[_render(title)]] + [[_render(t) for t, _ in sents] for sents in body]
    tgt_paras = [[_render(title)]]
    gold = [((1, 1), (1, 1))]

    edit_cut = (spec.drop_sentence_rate, spec.drop_sentence_rate + spec.split_rate,
                spec.drop_sentence_rate + spec.split_rate + spec.merge_rate)
    for k, sents in enumerate(body):
        src_par = k + 2
        dropped = rng.random() < spec.drop_paragraph_rate or src_par in spec.drop_paragraphs
        out: list[str] = []
        links: list[tuple[int, int]] = []  # (src sentence, tgt sentence) within the paragraph
        i = 0
        while i < len(sents):
            toks, is_quote = sents[i]
            r = rng.random()
            if is_quote:
                out.append(_render(toks))
                links.append((i + 1, len(out)))
            elif r < edit_cut[0]:
                pass
            elif r < edit_cut[1] and len(toks) >= 4:
                half = len(toks) // 2
                out.append(_render(sampler.perturb(toks[:half])))
                links.append((i + 1, len(out)))
                out.append(_render(sampler.perturb(toks[half:])))
                links.append((i + 1, len(out)))
            elif edit_cut[1] <= r < edit_cut[2] and i + 1 < len(sents) and not sents[i + 1][1]:
                out.append(_render(sampler.perturb(toks + sents[i + 1][0])))
                links.append((i + 1, len(out)))
                links.append((i + 2, len(out)))
                i += 1
            else:
                out.append(_render(sampler.perturb(toks)))
                links.append((i + 1, len(out)))
            i += 1
        if dropped or not out:
            continue
        tgt_paras.append(out)
        tgt_par = len(tgt_paras)
        gold.extend(((src_par, s), (tgt_par, t)) for s, t in links)

    src = Document.from_paragraph_texts(f"synth-{seed}-src", src_paras)
    tgt = Document.from_paragraph_texts(f"synth-{seed}-tgt", tgt_paras)
    return src, tgt, GoldAlignment(gold)


# Presets used by the test suite and the README calibration table.
IDENTITY_SPEC = SynthSpec()
STRUCTURED_SPEC = SynthSpec(
    drop_paragraph_rate=0.15,
    drop_sentence_rate=0.1,
    split_rate=0.15,
    merge_rate=0.15,
    quote_rate=0.3,
    replacement_rate=0.2,
)
