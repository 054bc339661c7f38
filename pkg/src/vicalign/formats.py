"""TSV / JSON serialization of alignments and gold files.

Sentence-pair TSV rows are ``src_par src_sent tgt_par tgt_sent [score]``
(1-based); lines starting with ``#`` are comments.  The ``align`` TSV also
carries its config, paragraph path and group boundaries in comment lines
so that it holds the same information as the JSON output.
"""

from __future__ import annotations

import io
import json
from typing import Any, Iterable, TextIO

from .errors import FormatError
from .evaluation import EvalReport, GoldAlignment
from .paragraphs import AlignmentGroup
from .pipeline import GlobalPair, PipelineResult, SentencePair

PAIR_HEADER = "# src_par\tsrc_sent\ttgt_par\ttgt_sent\tscore"


def _score(x: float) -> float:
    return float(f"{x:.6f}")


def read_pairs(fh: TextIO) -> set[GlobalPair]:
    """Read sentence pairs from a gold or prediction TSV (extra columns ignored)."""
    pairs = set()
    for lineno, line in enumerate(fh, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 4:
            raise FormatError(f"line {lineno}: expected at least 4 tab-separated columns, got {len(cols)}")
        try:
            sp, ss, tp, ts = (int(c) for c in cols[:4])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        if min(sp, ss, tp, ts) < 1:
            raise FormatError(f"line {lineno}: coordinates are 1-based")
        pairs.add(((sp, ss), (tp, ts)))
    return pairs


def read_gold(fh: TextIO) -> GoldAlignment:
    return GoldAlignment(read_pairs(fh))


def format_gold(gold: GoldAlignment) -> str:
    lines = ["# src_par\tsrc_sent\ttgt_par\ttgt_sent"]
    lines += [f"{sp}\t{ss}\t{tp}\t{ts}" for (sp, ss), (tp, ts) in gold]
    return "\n".join(lines) + "\n"


def _pair_row(p: SentencePair) -> str:
    return f"{p.src_par}\t{p.src_sent}\t{p.tgt_par}\t{p.tgt_sent}\t{p.score:.6f}"


def _pair_dict(p: SentencePair) -> dict[str, Any]:
    return {"src_par": p.src_par, "src_sent": p.src_sent, "tgt_par": p.tgt_par,
            "tgt_sent": p.tgt_sent, "score": _score(p.score)}


def format_pairs_tsv(pairs: Iterable[SentencePair]) -> str:
    return "\n".join([PAIR_HEADER] + [_pair_row(p) for p in pairs]) + "\n"


def format_pairs_json(pairs: Iterable[SentencePair]) -> str:
    return json.dumps({"pairs": [_pair_dict(p) for p in pairs]}, indent=2) + "\n"


def _group_dict(g: AlignmentGroup) -> dict[str, Any]:
    return {"src": list(g.src), "tgt": list(g.tgt), "kind": g.kind}


def result_to_dict(result: PipelineResult, src_id: str = "", tgt_id: str = "") -> dict[str, Any]:
    return {
        "src": src_id,
        "tgt": tgt_id,
        "config": {
            "alpha_paragraph": result.para_cfg.alpha,
            "alpha_sentence": result.sent_cfg.alpha,
            "beta": result.sent_cfg.beta,
        },
        "paragraph_path": [list(p) for p in result.paragraph_path],
        "groups": [
            dict(_group_dict(g.group), pairs=[_pair_dict(p) for p in g.pairs]) for g in result.groups
        ],
    }


def format_result_json(result: PipelineResult, src_id: str = "", tgt_id: str = "") -> str:
    return json.dumps(result_to_dict(result, src_id, tgt_id), indent=2) + "\n"


def format_result_tsv(result: PipelineResult, src_id: str = "", tgt_id: str = "") -> str:
    d = result_to_dict(result, src_id, tgt_id)
    cfg = " ".join(f"{k}={v!r}" for k, v in d["config"].items())
    path = " ".join(f"{x},{y}" for x, y in d["paragraph_path"])
    out = [f"# src={src_id}", f"# tgt={tgt_id}", f"# config {cfg}", f"# paragraph_path {path}", PAIR_HEADER]
    for g in result.groups:
        gd = _group_dict(g.group)
        out.append(f"# group src={gd['src'][0]}-{gd['src'][1]} tgt={gd['tgt'][0]}-{gd['tgt'][1]} kind={gd['kind']}")
        out.extend(_pair_row(p) for p in g.pairs)
    return "\n".join(out) + "\n"


def parse_result_tsv(text: str) -> dict[str, Any]:
    """Inverse of :func:`format_result_tsv`, producing the JSON layout."""
    d: dict[str, Any] = {"src": "", "tgt": "", "config": {}, "paragraph_path": [], "groups": []}
    for line in io.StringIO(text):
        line = line.rstrip("\n")
        if line.startswith("# src="):
            d["src"] = line[len("# src="):]
        elif line.startswith("# tgt="):
            d["tgt"] = line[len("# tgt="):]
        elif line.startswith("# config "):
            for item in line[len("# config "):].split():
                k, v = item.split("=", 1)
                d["config"][k] = float(v)
        elif line.startswith("# paragraph_path"):
            d["paragraph_path"] = [[int(c) for c in tok.split(",")] for tok in line.split()[2:]]
        elif line.startswith("# group "):
            fields = dict(item.split("=", 1) for item in line.split()[2:])
            src = [int(v) for v in fields["src"].split("-")]
            tgt = [int(v) for v in fields["tgt"].split("-")]
            d["groups"].append({"src": src, "tgt": tgt, "kind": fields["kind"], "pairs": []})
        elif line and not line.startswith("#"):
            sp, ss, tp, ts, score = line.split("\t")
            d["groups"][-1]["pairs"].append({"src_par": int(sp), "src_sent": int(ss), "tgt_par": int(tp),
                                             "tgt_sent": int(ts), "score": float(score)})
    return d


def format_groups_tsv(groups: Iterable[AlignmentGroup]) -> str:
    out = ["# src_start\tsrc_end\ttgt_start\ttgt_end\tkind"]
    out += [f"{g.src[0]}\t{g.src[1]}\t{g.tgt[0]}\t{g.tgt[1]}\t{g.kind}" for g in groups]
    return "\n".join(out) + "\n"


def format_groups_json(path: Iterable[tuple[int, int]], groups: Iterable[AlignmentGroup]) -> str:
    return json.dumps({"paragraph_path": [list(p) for p in path],
                       "groups": [_group_dict(g) for g in groups]}, indent=2) + "\n"


def format_report(report: EvalReport, fmt: str = "tsv") -> str:
    values = {
        "precision": report.precision,
        "recall": report.recall,
        "f1": report.f1,
        "tp": report.true_positives,
        "fp": report.false_positives,
        "fn": report.false_negatives,
    }
    if fmt == "json":
        return json.dumps(values, indent=2) + "\n"
    return "".join(f"{k}\t{v:.6f}\n" if isinstance(v, float) else f"{k}\t{v}\n" for k, v in values.items())
