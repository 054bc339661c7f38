"""Document -> Paragraph -> Sentence model and the corpus file format.

Corpus files are UTF-8 text with one sentence per line and paragraphs
separated by one or more blank lines.  The first paragraph is expected
to be the article title.
"""

from __future__ import annotations

import io
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO, Union

from .errors import EmptyDocument, EmptyParagraph

# runs of Unicode letters/digits (\w minus underscore)
_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Lowercase ``text`` and split it on every run of non-alphanumeric characters.

    >>> tokenize("The quick, brown fox!")
    ['the', 'quick', 'brown', 'fox']
    """
    text = unicodedata.normalize("NFC", text)
    text = unicodedata.normalize("NFC", text.lower())
    return _TOKEN_RE.findall(text)


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[str, ...]

    @classmethod
    def from_text(cls, index: int, text: str) -> "Sentence":
        return cls(index, text, tuple(tokenize(text)))


@dataclass(frozen=True)
class Paragraph:
    index: int
    sentences: tuple[Sentence, ...]

    def __post_init__(self):
        if not self.sentences:
            raise EmptyParagraph(f"paragraph {self.index} has no sentences")

    @classmethod
    def from_texts(cls, index: int, texts: Iterable[str]) -> "Paragraph":
        return cls(index, tuple(Sentence.from_text(i, t) for i, t in enumerate(texts, 1)))

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def texts(self) -> list[str]:
        return [s.text for s in self.sentences]


@dataclass(frozen=True)
class Document:
    id: str
    paragraphs: tuple[Paragraph, ...]

    def __post_init__(self):
        if not self.paragraphs:
            raise EmptyDocument(f"document {self.id!r} has no paragraphs")

    def __len__(self) -> int:
        return len(self.paragraphs)

    def paragraph(self, index: int) -> Paragraph:
        """Return paragraph by 1-based index."""
        return self.paragraphs[index - 1]

    def sentences(self) -> list[Sentence]:
        return [s for p in self.paragraphs for s in p.sentences]

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.paragraphs]

    @classmethod
    def from_paragraph_texts(cls, id: str, paragraphs: Iterable[Iterable[str]]) -> "Document":
        return cls(id, tuple(Paragraph.from_texts(i, ts) for i, ts in enumerate(paragraphs, 1)))


def parse_document(raw: Union[str, TextIO], id: str = "") -> Document:
    """Parse corpus-format text into a :class:`Document`.

    Sentence text is stripped of surrounding whitespace.  Raises
    :class:`EmptyDocument` when there is no non-blank line.
    """
    if not isinstance(raw, str):
        raw = raw.read()
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in raw.splitlines():
        line = line.strip()
        if line:
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise EmptyDocument(f"document {id!r} contains no text")
    return Document.from_paragraph_texts(id, blocks)


def read_document(path: Union[str, Path], id: str | None = None) -> Document:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh, id if id is not None else path.name)


def format_document(doc: Document) -> str:
    """Serialize back to the corpus format (inverse of :func:`parse_document`)."""
    out = io.StringIO()
    for k, para in enumerate(doc.paragraphs):
        if k:
            out.write("\n")
        for sent in para.sentences:
            out.write(sent.text + "\n")
    return out.getvalue()
