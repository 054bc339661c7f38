"""Exception hierarchy shared by all modules."""


class AlignmentError(ValueError):
    """Base class for data errors raised by vicalign."""


class EmptyDocument(AlignmentError):
    pass


class EmptyParagraph(AlignmentError):
    pass


class EmptyCorpus(AlignmentError):
    pass


class EmptyMatrix(AlignmentError):
    pass


class OutOfBounds(AlignmentError, IndexError):
    pass


class NonContiguousComponent(AlignmentError):
    pass


class InvalidSpec(AlignmentError):
    pass


class FormatError(AlignmentError):
    """Malformed TSV / gold alignment input."""
