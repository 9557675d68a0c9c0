"""Raw book text to lemma stream: tokenize, drop stopwords, lemmatize.

The order is fixed (tokenize, stopword filter, lemmatize), so stopwords are
matched against surface forms. A lemma-level stopword list has to be expanded
to its inflected forms before use.
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import FormatError, LanguageMismatch


@dataclass(frozen=True)
class RawDocument:
    id: str
    language: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise FormatError("document id must be non-empty")

    @classmethod
    def from_file(cls, path, id: str, language: str) -> "RawDocument":
        return cls(id=id, language=language, text=Path(path).read_text(encoding="utf-8"))


def _check_word(word: str, what: str) -> None:
    if not word or word != word.lower() or any(c.isspace() for c in word):
        raise FormatError(f"{what} {word!r} must be non-empty, lowercase, without whitespace")


@dataclass(frozen=True)
class StopwordList:
    language: str
    words: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            _check_word(w, "stopword")

    def __contains__(self, word) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def load(cls, path, language: str) -> "StopwordList":
        words = set()
        for line in _content_lines(path):
            # lists from other tools are often capitalised
            words.add(unicodedata.normalize("NFC", line).lower())
        return cls(language, frozenset(words))


@dataclass(frozen=True)
class LemmaMap:
    """Surface form to lemma lookup; forms not in the map are their own lemma."""

    language: str
    entries: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))
        for surface, lemma in self.entries.items():
            _check_word(surface, "surface form")
            _check_word(lemma, "lemma")
            if not lemma.isalpha():
                raise FormatError(f"lemma {lemma!r} for {surface!r} contains non-letters")

    def __getitem__(self, token: str) -> str:
        return self.entries.get(token, token)

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def load(cls, path, language: str) -> "LemmaMap":
        entries = {}
        for lineno, line in enumerate(_content_lines(path), 1):
            parts = line.split("\t")
            if len(parts) != 2:
                raise FormatError(f"{path}: expected 'surface<TAB>lemma', got {line!r}")
            surface, lemma = (unicodedata.normalize("NFC", p.strip()) for p in parts)
            entries[surface] = lemma
        return cls(language, entries)


@dataclass(frozen=True)
class TokenStream:
    doc_id: str
    lemmas: tuple
    count_with_stopwords: int
    count_without_stopwords: int
    language: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lemmas", tuple(self.lemmas))

    def __len__(self) -> int:
        return len(self.lemmas)

    def counts(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "language": self.language,
            "count_with_stopwords": self.count_with_stopwords,
            "count_without_stopwords": self.count_without_stopwords,
        }

    def save(self, directory) -> tuple[Path, Path]:
        """Write ``<doc_id>.lemmas.txt`` (one lemma per line) and ``<doc_id>.counts.json``."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        lemma_path = directory / f"{self.doc_id}.lemmas.txt"
        counts_path = directory / f"{self.doc_id}.counts.json"
        lemma_path.write_text("".join(f"{w}\n" for w in self.lemmas), encoding="utf-8")
        counts_path.write_text(json.dumps(self.counts(), ensure_ascii=False, indent=2) + "\n",
                               encoding="utf-8")
        return lemma_path, counts_path

    @classmethod
    def load(cls, lemma_path) -> "TokenStream":
        """Read a lemma file; the counts sidecar is optional."""
        lemma_path = Path(lemma_path)
        lemmas = [line.strip() for line in lemma_path.read_text(encoding="utf-8").splitlines()]
        lemmas = [w for w in lemmas if w]
        name = lemma_path.name
        doc_id = name[: -len(".lemmas.txt")] if name.endswith(".lemmas.txt") else lemma_path.stem
        sidecar = lemma_path.with_name(f"{doc_id}.counts.json")
        if sidecar.exists():
            meta = json.loads(sidecar.read_text(encoding="utf-8"))
            return cls(meta.get("doc_id", doc_id), lemmas, int(meta["count_with_stopwords"]),
                       int(meta["count_without_stopwords"]), meta.get("language", ""))
        return cls(doc_id, lemmas, len(lemmas), len(lemmas))


def _content_lines(path):
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line.strip()


def tokenize(text: str) -> list[str]:
    """Lowercased maximal runs of Unicode letters.

    Everything that is not a letter (digits, punctuation, apostrophes,
    hyphens, combining marks left over after composition) separates tokens.
    Runs containing digits are dropped whole: ``"B5"`` yields nothing.
    """
    text = unicodedata.normalize("NFC", unicodedata.normalize("NFC", text).lower())
    tokens = []
    start = None
    has_digit = False
    for i, ch in enumerate(text):
        if ch.isalpha():
            if start is None:
                start = i
            continue
        if ch.isdigit() and start is not None:
            has_digit = True
            continue
        if ch.isdigit():
            start, has_digit = i, True
            continue
        if start is not None:
            if not has_digit:
                tokens.append(text[start:i])
            start, has_digit = None, False
    if start is not None and not has_digit:
        tokens.append(text[start:])
    return tokens


def remove_stopwords(tokens: Iterable[str], stopwords: StopwordList) -> list[str]:
    words = stopwords.words
    return [t for t in tokens if t not in words]


def lemmatize(tokens: Iterable[str], lemmas: LemmaMap) -> list[str]:
    table = lemmas.entries
    return [table.get(t, t) for t in tokens]


def preprocess(doc: RawDocument, stopwords: StopwordList, lemmas: LemmaMap) -> TokenStream:
    if not (doc.language == stopwords.language == lemmas.language):
        raise LanguageMismatch(
            f"{doc.id}: document '{doc.language}', stopwords '{stopwords.language}', "
            f"lemma map '{lemmas.language}'"
        )
    tokens = tokenize(doc.text)
    kept = lemmatize(remove_stopwords(tokens, stopwords), lemmas)
    return TokenStream(doc.id, kept, len(tokens), len(kept), doc.language)
