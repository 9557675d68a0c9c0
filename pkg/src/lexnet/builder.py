"""Co-occurrence network construction: adjacent lemmas become a directed link."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import LexNetwork
from .text import TokenStream


@dataclass(frozen=True)
class BuildOptions:
    break_on_document_boundary: bool = True
    window: int = 1

    def __post_init__(self):
        if self.window != 1:
            raise ValueError("only adjacent-word co-occurrence (window=1) is supported")


def build_cooccurrence(streams, opts: BuildOptions | None = None) -> LexNetwork:
    """Directed network over the lemmas of ``streams``.

    Links follow reading order, w_t -> w_{t+1}; repeated words in a row give
    no self-loop. Streams are separate documents unless boundary breaking is
    switched off, in which case the last lemma of one stream is linked to the
    first of the next.
    """
    opts = opts or BuildOptions()
    if isinstance(streams, TokenStream):
        streams = [streams]
    g = LexNetwork(directed=True)
    prev = None
    for stream in streams:
        lemmas = stream.lemmas if isinstance(stream, TokenStream) else stream
        if opts.break_on_document_boundary:
            prev = None
        for word in lemmas:
            node = g.intern(word)
            if prev is not None:
                g.add_link(prev, node)
            prev = node
    return g
