"""Vicinity-driven paragraph and sentence alignment for comparable documents."""

from .errors import (
    AlignmentError,
    EmptyCorpus,
    EmptyDocument,
    EmptyMatrix,
    EmptyParagraph,
    FormatError,
    InvalidSpec,
    NonContiguousComponent,
    OutOfBounds,
)
from .evaluation import EvalReport, GoldAlignment, evaluate, jaccard_align, jaccard_pairs
from .paragraphs import (
    AlignmentGroup,
    AlignmentPath,
    ParaAlignConfig,
    align_paragraphs,
    concatenate_group,
    group_alignments,
)
from .pipeline import PipelineResult, SentencePair, align_documents, local_to_global
from .sentences import (
    ConcatSimilarityQuery,
    SentAlignConfig,
    align_sentence_matrix,
    align_sentences,
    concat_similarity,
    group_sentence_alignments,
)
from .similarity import (
    TfIdfModel,
    cosine,
    fit_pair_model,
    fit_tfidf,
    jaccard,
    paragraph_matrix,
    sentence_matrix,
)
from .synth import SynthSpec, synthesize_pair
from .text import Document, Paragraph, Sentence, format_document, parse_document, read_document, tokenize

__version__ = "0.1.0"
