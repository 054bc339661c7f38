"""Command-line interface.

Exit status: 0 on success, 1 on usage errors, 2 on data errors.  Output
files are only written once the whole result has been computed.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .errors import AlignmentError
from .evaluation import evaluate, jaccard_pairs
from .paragraphs import ParaAlignConfig, align_paragraphs, group_alignments
from .pipeline import align_documents
from .sentences import SentAlignConfig
from .similarity import fit_pair_model, paragraph_matrix, write_matrix_tsv
from .synth import SynthSpec, synthesize_pair
from .text import format_document, read_document


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _unit_interval(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{v} is outside [0, 1]")
    return v


def _non_negative(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0.0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vicalign", description="Align comparable documents at paragraph and sentence level.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_io(p, formats_=("tsv", "json")):
        p.add_argument("--src", required=True, help="source document (corpus format)")
        p.add_argument("--tgt", required=True, help="target document (corpus format)")
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=formats_, default="tsv")

    p = sub.add_parser("align", help="paragraph + sentence alignment")
    add_io(p)
    p.add_argument("--alpha-paragraph", type=_unit_interval, default=0.5)
    p.add_argument("--alpha-sentence", type=_unit_interval, default=0.5)
    p.add_argument("--beta", type=_non_negative, default=0.05)
    p.add_argument("--dump-matrices", metavar="DIR", help="write similarity matrices as TSV into DIR")

    p = sub.add_parser("align-paragraphs", help="paragraph alignment only; emits paragraph groups")
    add_io(p)
    p.add_argument("--alpha-paragraph", type=_unit_interval, default=0.5)
    p.add_argument("--dump-matrices", metavar="DIR")

    p = sub.add_parser("baseline-jaccard", help="all sentence pairs with Jaccard above a threshold")
    add_io(p)
    p.add_argument("--threshold", type=_unit_interval, default=0.5)

    p = sub.add_parser("eval", help="precision / recall / F1 of predicted pairs against gold")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("synth", help="generate a synthetic document pair with gold alignment")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spec", help="JSON file of synthesis parameters")
    p.add_argument("-o", "--output", required=True, metavar="DIR",
                   help="directory receiving src.txt, tgt.txt and gold.tsv")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_align(args) -> dict[str, str]:
    d1, d2 = read_document(args.src), read_document(args.tgt)
    result = align_documents(d1, d2, ParaAlignConfig(args.alpha_paragraph),
                             SentAlignConfig(args.alpha_sentence, args.beta))
    render = formats.format_result_json if args.format == "json" else formats.format_result_tsv
    files = {"": render(result, d1.id, d2.id)}
    if args.dump_matrices:
        files[str(Path(args.dump_matrices) / "paragraphs.tsv")] = _matrix_text(result.paragraph_matrix)
        for g in result.groups:
            name = f"sentences_{g.group.src[0]}-{g.group.src[1]}_{g.group.tgt[0]}-{g.group.tgt[1]}.tsv"
            files[str(Path(args.dump_matrices) / name)] = _matrix_text(g.matrix)
    return files


def _matrix_text(m) -> str:
    buf = io.StringIO()
    write_matrix_tsv(m, buf)
    return buf.getvalue()


def _cmd_align_paragraphs(args) -> dict[str, str]:
    d1, d2 = read_document(args.src), read_document(args.tgt)
    pm = paragraph_matrix(fit_pair_model(d1, d2), d1, d2)
    path = align_paragraphs(pm, ParaAlignConfig(args.alpha_paragraph))
    groups = group_alignments(path)
    if args.format == "json":
        text = formats.format_groups_json(path, groups)
    else:
        text = formats.format_groups_tsv(groups)
    files = {"": text}
    if args.dump_matrices:
        files[str(Path(args.dump_matrices) / "paragraphs.tsv")] = _matrix_text(pm)
    return files


def _cmd_baseline(args) -> dict[str, str]:
    d1, d2 = read_document(args.src), read_document(args.tgt)
    pairs = jaccard_pairs(d1, d2, args.threshold)
    render = formats.format_pairs_json if args.format == "json" else formats.format_pairs_tsv
    return {"": render(pairs)}


def _cmd_eval(args) -> dict[str, str]:
    with open(args.pred, encoding="utf-8") as fh:
        pred = formats.read_pairs(fh)
    with open(args.gold, encoding="utf-8") as fh:
        gold = formats.read_gold(fh)
    return {"": formats.format_report(evaluate(pred, gold), args.format)}


def _cmd_synth(args) -> dict[str, str]:
    spec = SynthSpec.from_json(args.spec) if args.spec else SynthSpec()
    src, tgt, gold = synthesize_pair(args.seed, spec)
    out = Path(args.output)
    return {
        str(out / "src.txt"): format_document(src),
        str(out / "tgt.txt"): format_document(tgt),
        str(out / "gold.tsv"): formats.format_gold(gold),
    }


COMMANDS = {
    "align": _cmd_align,
    "align-paragraphs": _cmd_align_paragraphs,
    "baseline-jaccard": _cmd_baseline,
    "eval": _cmd_eval,
    "synth": _cmd_synth,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return 1
    try:
        files = COMMANDS[args.command](args)
        for path, text in files.items():
            if path:
                Path(path).parent.mkdir(parents=True, exist_ok=True)
                Path(path).write_text(text, encoding="utf-8")
            else:
                _emit(text, args.output)
    except (AlignmentError, OSError, UnicodeDecodeError, ValueError) as exc:
        print(f"vicalign {args.command}: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
