"""Exception hierarchy.

Everything a caller can trigger with bad input derives from ``LexnetError``;
the CLI maps those to exit code 2. ``InvariantViolation`` signals a bug and
maps to exit code 3.
"""


class LexnetError(Exception):
    pass


class LanguageMismatch(LexnetError):
    pass


class DuplicateLabel(LexnetError):
    pass


class NodeOutOfRange(LexnetError, IndexError):
    pass


class TooManyLinks(LexnetError, ValueError):
    pass


class EmptyGraph(LexnetError):
    pass


class NoPaths(LexnetError):
    pass


class UndefinedMeasure(LexnetError):
    pass


class EmptyDocument(LexnetError):
    pass


class FormatError(LexnetError, ValueError):
    """Malformed stopword list, lemma map, manifest, edge list or report."""


class InvariantViolation(Exception):
    pass


class InputError(LexnetError):
    """Unreadable or missing input file."""
